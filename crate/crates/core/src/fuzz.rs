//! Seeded random cross-checks of the two pipelines and the bicomplex
//! identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{random_complex, to_json, SimplicialComplex};
use crate::hochster::ChComplex;
use crate::koszul::{hochster_to_koszul_iso, KoszulCohomology};
use crate::linalg::Integers;

#[derive(Clone, Copy, Debug)]
pub struct FuzzConfig {
    pub seed: u64,
    pub m_max: usize,
    pub trials: usize,
    /// Negate one block of the Hochster differential; every run should then
    /// report a violation on the first complex where the block matters.
    pub inject_sign_fault: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FuzzSummary {
    pub trials: usize,
    pub largest_m: usize,
    pub total_hh_rank: usize,
}

/// The first failed check, with the complex serialized for replay.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("trial {trial}: {reason}\n{complex_json}")]
pub struct FuzzViolation {
    pub trial: usize,
    pub reason: String,
    pub complex_json: String,
}

/// Runs every check on one complex, returning the total rank of `HH`.
pub fn check_complex(k: &SimplicialComplex, inject_sign_fault: bool) -> Result<usize, String> {
    let ring = Integers;
    let ch = if inject_sign_fault {
        ChComplex::with_injected_sign_fault(&ring, k)
    } else {
        ChComplex::cohomology(&ring, k)
    }
    .map_err(|e| e.to_string())?;
    let kc = KoszulCohomology::new(&ring, k).map_err(|e| e.to_string())?;
    kc.r_complex()
        .check_identities(&ring)
        .map_err(|e| e.to_string())?;
    hochster_to_koszul_iso(k).map_err(|e| e.to_string())?;
    let h = ch.module();
    if h != kc.module() {
        return Err(format!("H disagrees: {h} vs {}", kc.module()));
    }
    let hh = ch.double().map_err(|e| e.to_string())?.module;
    let hh_k = kc.double().map_err(|e| e.to_string())?.module;
    if hh != hh_k {
        return Err(format!("HH disagrees: {hh} vs {hh_k}"));
    }
    let want = i64::from(k.is_simplex());
    if hh.euler_characteristic() != want {
        return Err(format!(
            "Euler characteristic {} instead of {want}",
            hh.euler_characteristic()
        ));
    }
    Ok(hh.total_rank())
}

pub fn run_fuzz(cfg: &FuzzConfig) -> Result<FuzzSummary, FuzzViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut summary = FuzzSummary::default();
    for trial in 0..cfg.trials {
        let m = rng.gen_range(1..=cfg.m_max.max(1));
        let k = random_complex(&mut rng, m);
        match check_complex(&k, cfg.inject_sign_fault) {
            Ok(rank) => {
                summary.trials += 1;
                summary.largest_m = summary.largest_m.max(m);
                summary.total_hh_rank += rank;
            }
            Err(reason) => {
                return Err(FuzzViolation {
                    trial,
                    reason,
                    complex_json: to_json(&k),
                })
            }
        }
    }
    Ok(summary)
}
