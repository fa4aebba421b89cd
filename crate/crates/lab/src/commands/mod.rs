pub mod ahlfors;
pub mod brody;
pub mod current;
pub mod green;
pub mod lelong;
pub mod sextic;
pub mod winkelmann;

use brody_core::poly::{exp_degree_for, Poly};
use brody_core::{holomap::PolyMap, C64};

use crate::cli::Family;
use crate::config::{self, MapFile};
use crate::error::{LabError, LabResult};
use crate::Context;

/// Relative truncation error allowed for `exp(nz)`.
const EXP_TOL: f64 = 1e-15;

pub fn family_map(family: Family, n: u32, radius: f64) -> LabResult<PolyMap> {
    if n == 0 {
        return Err(LabError::config("n must be ≥ 1"));
    }
    let nf = n as f64;
    let one = Poly::from_real(&[1.0]);
    let second = match family {
        Family::Nz => Poly::from_real(&[0.0, nf]),
        Family::Poly => Poly::from_real(&[0.0, nf, nf]),
        Family::Exp => {
            let s = C64::new(nf, 0.0);
            Poly::truncated_exp(s, exp_degree_for(s, radius, EXP_TOL))
        }
    };
    Ok(PolyMap::new(vec![one, second], radius)?)
}

/// The map from `--config` if given, else the family member.
pub fn map_source(ctx: &Context, family: Family, n: u32, radius: f64) -> LabResult<PolyMap> {
    match &ctx.config {
        Some(p) => config::load::<MapFile>(p)?.to_map(),
        None => family_map(family, n, radius),
    }
}

/// Collects named pass/fail checks and reports them on stderr.
pub struct SelfTest {
    name: &'static str,
    failures: Vec<String>,
    count: usize,
}

impl SelfTest {
    pub fn new(name: &'static str) -> Self {
        SelfTest {
            name,
            failures: Vec::new(),
            count: 0,
        }
    }

    pub fn check(&mut self, label: &str, ok: bool) {
        self.count += 1;
        if !ok {
            self.failures.push(label.to_string());
        }
    }

    pub fn finish(self) -> LabResult<()> {
        if self.failures.is_empty() {
            eprintln!("selftest {}: {} checks ok", self.name, self.count);
            Ok(())
        } else {
            Err(LabError::invariant(self.name, format!("failed {:?}", self.failures)))
        }
    }
}
