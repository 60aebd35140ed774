//! Paired and unpaired many-to-many disjoint path covers on arbitrary
//! simple graphs.

use rand::Rng;

use crate::cover::{self, CoverDeployment, CoverProblem, Role};
use crate::error::{violation, Error, Result};
use crate::instances::{DpcInstance, DpcWitness, WitnessCheck};
use crate::transcript::Transcript;
use crate::verdict::Verdict;

pub type DpcDeployment = CoverDeployment;

/// Honest prover: path `j` (from source `j`) carries colour `j + 1`.
pub fn deploy_dpc<R: Rng + ?Sized>(inst: &DpcInstance, w: &DpcWitness, rng: &mut R) -> Result<DpcDeployment> {
    if !inst.validate_witness(w) {
        return Err(Error::InvalidWitness("paths are not a disjoint path cover".into()));
    }
    cover::deploy_paths(&CoverProblem::from_dpc(inst), &w.paths, rng)
}

pub fn run_dpc_protocol(inst: &DpcInstance, d: &DpcDeployment, seed: u64) -> Result<(Verdict, Transcript)> {
    cover::run_cover_protocol(&CoverProblem::from_dpc(inst), d, seed)
}

/// Sinks whose terminal check scrambles the colour columns. Only unpaired
/// instances have any.
pub fn unpaired_sinks(inst: &DpcInstance) -> Result<Vec<usize>> {
    if inst.paired {
        return Err(violation("sink column scramble requested on a paired instance"));
    }
    let p = CoverProblem::from_dpc(inst);
    Ok(inst
        .sinks
        .iter()
        .copied()
        .filter(|&t| p.roles[t] == Role::BlindTerminal)
        .collect())
}
