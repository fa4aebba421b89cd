use std::f64::consts::PI;

use brody_core::complexgeom::ProjPoint;
use brody_core::greenpoly::{
    embed, epsilon_for_config, face_decomposition, polyhedron_membership, power_map, random_p4, sample_p2,
    LineConfig5,
};
use brody_core::C64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SelfTest;
use crate::cli::{GreenArgs, GreenCheck};
use crate::config::{self, LinesFile};
use crate::error::{LabError, LabResult};
use crate::output::{num, Table};
use crate::Context;

const HEADER: [&str; 3] = ["point_id", "margin", "faces"];

fn faces_field(z: &ProjPoint) -> String {
    match face_decomposition(z) {
        Ok(faces) => faces
            .iter()
            .map(|t| format!("{}{}{}", t[0], t[1], t[2]))
            .collect::<Vec<_>>()
            .join(";"),
        Err(_) => String::new(),
    }
}

fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

/// A point of `X₁`: three random coordinates of modulus 1, the others smaller.
pub fn random_x1_point(rng: &mut ChaCha8Rng) -> ProjPoint {
    let mut idx = [0usize, 1, 2, 3, 4];
    for i in (1..5).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        idx.swap(i, j);
    }
    let mut v = vec![C64::new(0.0, 0.0); 5];
    for (k, &i) in idx.iter().enumerate() {
        let r = if k < 3 { 1.0 } else { unit(rng) };
        v[i] = C64::from_polar(r, 2.0 * PI * unit(rng));
    }
    ProjPoint::new(v).expect("three unit coordinates")
}

fn lines(ctx: &Context) -> LabResult<LineConfig5> {
    match &ctx.config {
        Some(p) => config::load::<LinesFile>(p)?.to_config(),
        None => Ok(LineConfig5::standard()),
    }
}

pub fn run(ctx: &Context, args: &GreenArgs) -> LabResult<()> {
    let config = lines(ctx)?;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut table = Table::create(ctx.out.as_deref(), &HEADER)?;
    match args.check {
        GreenCheck::Preimage => {
            if !(args.eps > 0.0 && args.eps < 1.0) || args.n == 0 {
                return Err(LabError::config("preimage check needs 0 < --eps < 1 and --n ≥ 1"));
            }
            let root = args.eps.powf(1.0 / args.n as f64);
            let mut bad = 0;
            for id in 0..args.samples {
                let z = random_p4(&mut rng);
                let lhs = polyhedron_membership(&power_map(args.n, &z)?, args.eps)?;
                let rhs = polyhedron_membership(&z, root)?;
                if lhs.member != rhs.member {
                    bad += 1;
                }
                table.row([id.to_string(), num(rhs.margin), faces_field(&z)])?;
            }
            table.finish()?;
            eprintln!("green: {bad} discrepancies in {} points", args.samples);
            if bad > 0 {
                return Err(LabError::invariant(
                    "greenpoly::power_preimage_identity_check",
                    format!("{bad} discrepancies"),
                ));
            }
        }
        GreenCheck::Epsilon => {
            let est = epsilon_for_config(&config, args.samples)?;
            eprintln!(
                "green: epsilon estimate {} near_degenerate {}",
                num(est.epsilon),
                est.near_degenerate
            );
            let mut outside = 0;
            for id in 0..args.samples {
                let e = embed(&config, &sample_p2(id as u64))?;
                let m = polyhedron_membership(&e, est.epsilon)?;
                if !m.member {
                    outside += 1;
                }
                table.row([id.to_string(), num(m.margin), faces_field(&e)])?;
            }
            table.finish()?;
            if outside > 0 {
                return Err(LabError::invariant(
                    "greenpoly::epsilon_for_config",
                    format!("{outside} sampled points outside X_ε"),
                ));
            }
        }
        GreenCheck::Faces => {
            let mut empty = 0;
            for id in 0..args.samples {
                let z = random_x1_point(&mut rng);
                let m = polyhedron_membership(&z, 1.0)?;
                let f = faces_field(&z);
                if f.is_empty() {
                    empty += 1;
                }
                table.row([id.to_string(), num(m.margin), f])?;
            }
            table.finish()?;
            if empty > 0 {
                return Err(LabError::invariant(
                    "greenpoly::face_decomposition",
                    format!("{empty} members of X₁ with no face"),
                ));
            }
        }
    }
    Ok(())
}

pub fn selftest(_ctx: &Context, _args: &GreenArgs) -> LabResult<()> {
    let mut t = SelfTest::new("green::selftest");
    let p = |v: &[f64]| ProjPoint::from_real(v);
    let z = p(&[1.0, 0.5, 0.25, 0.0, 0.0])?;
    t.check("F₁ is the identity", power_map(1, &z)?.distance(&z) == 0.0);
    t.check("[1:1:1:0:0] ∈ X₁", polyhedron_membership(&p(&[1.0, 1.0, 1.0, 0.0, 0.0])?, 1.0)?.member);
    t.check("[1:1:0:0:0] ∉ X₁", !polyhedron_membership(&p(&[1.0, 1.0, 0.0, 0.0, 0.0])?, 1.0)?.member);
    t.check("X_ε exhausts", polyhedron_membership(&z, 1e-300)?.member);
    t.check("symmetric point lies on all faces", face_decomposition(&p(&[1.0; 5])?)?.len() == 10);
    t.finish()
}
