//! JSON scenario files. Complex numbers are `[re, im]` pairs and unknown
//! keys are rejected.

use std::fs;
use std::path::Path;

use brody_core::greenpoly::LineConfig5;
use brody_core::hompoly::MultiPoly;
use brody_core::lelong::BallCurve;
use brody_core::poly::Poly;
use brody_core::sexticdeform::{build_incidence, PlaneConfig6};
use brody_core::{holomap::PolyMap, C64};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{LabError, LabResult};

pub type Complex = [f64; 2];

fn c(z: Complex) -> C64 {
    C64::new(z[0], z[1])
}

pub fn load<T: DeserializeOwned>(path: &Path) -> LabResult<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| LabError::config(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| LabError::config(format!("{}: {e}", path.display())))
}

/// `components[i]` lists the coefficients of the `i`-th homogeneous
/// coordinate, lowest degree first.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub components: Vec<Vec<Complex>>,
    pub domain_radius: f64,
}

impl MapFile {
    pub fn to_map(&self) -> LabResult<PolyMap> {
        let comps = self.components.iter().map(|cs| Poly::new(cs.iter().map(|&z| c(z)).collect())).collect();
        Ok(PolyMap::new(comps, self.domain_radius)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub components: Vec<Vec<Complex>>,
    pub ball_radius: f64,
    pub param_radius: f64,
}

impl CurveFile {
    pub fn to_curve(&self) -> LabResult<BallCurve> {
        let comps = self.components.iter().map(|cs| Poly::new(cs.iter().map(|&z| c(z)).collect())).collect();
        Ok(BallCurve::new(comps, self.ball_radius, self.param_radius)?)
    }
}

/// Five linear forms on `C³`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinesFile {
    pub forms: Vec<Vec<Complex>>,
}

impl LinesFile {
    pub fn to_config(&self) -> LabResult<LineConfig5> {
        if self.forms.len() != 5 || self.forms.iter().any(|f| f.len() != 3) {
            return Err(LabError::config("expected 5 forms with 3 coefficients each"));
        }
        let mut forms = [[C64::new(0.0, 0.0); 3]; 5];
        for (row, f) in forms.iter_mut().zip(&self.forms) {
            for (x, &z) in row.iter_mut().zip(f) {
                *x = c(z);
            }
        }
        Ok(LineConfig5::new(forms)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SexticTerm {
    pub exponent: [u32; 4],
    pub coeff: Complex,
}

/// Six linear forms on `C⁴` and an optional sextic (Fermat when absent).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanesFile {
    pub forms: Vec<Vec<Complex>>,
    #[serde(default)]
    pub sextic: Option<Vec<SexticTerm>>,
}

impl PlanesFile {
    pub fn to_config(&self) -> LabResult<PlaneConfig6> {
        if self.forms.len() != 6 || self.forms.iter().any(|f| f.len() != 4) {
            return Err(LabError::config("expected 6 forms with 4 coefficients each"));
        }
        let mut forms = [[C64::new(0.0, 0.0); 4]; 6];
        for (row, f) in forms.iter_mut().zip(&self.forms) {
            for (x, &z) in row.iter_mut().zip(f) {
                *x = c(z);
            }
        }
        Ok(build_incidence(forms)?)
    }

    pub fn sextic(&self) -> LabResult<Option<MultiPoly>> {
        self.sextic
            .as_ref()
            .map(|terms| {
                MultiPoly::from_terms(4, terms.iter().map(|t| (t.exponent.to_vec(), c(t.coeff))))
                    .map_err(LabError::from)
            })
            .transpose()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WinkelmannFile {
    pub lambda: f64,
    #[serde(default)]
    pub offset: Option<[Complex; 2]>,
}

impl WinkelmannFile {
    pub fn offset(&self) -> Option<[C64; 2]> {
        self.offset.map(|[a, b]| [c(a), c(b)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_rejected() {
        let r: Result<MapFile, _> = serde_json::from_str(r#"{"components": [], "domain_radius": 1, "extra": 0}"#);
        assert!(r.is_err());
    }

    #[test]
    fn map_round_trip() {
        let m: MapFile =
            serde_json::from_str(r#"{"components": [[[1, 0]], [[0, 0], [1, 0], [1, 0]]], "domain_radius": 2}"#)
                .unwrap();
        let f = m.to_map().unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.radius(), 2.0);
    }
}
