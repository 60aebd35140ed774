//! Shared setup for the protocol benchmarks.

use cardzk::{deploy_honest, fixtures, Deployment, Instance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Named instances with one honest deployment each.
pub fn cases() -> Vec<(String, Instance, Deployment)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let instances = [
        ("ham/k5", Instance::Ham(fixtures::graph("k5"))),
        ("ham/cube", Instance::Ham(fixtures::graph("cube"))),
        ("flow/board3x3", Instance::Flow(fixtures::board("board3x3"))),
        ("flow/wide", Instance::Flow(fixtures::board("wide"))),
        ("dpc/grid-unpaired", Instance::Dpc(fixtures::dpc("grid-unpaired"))),
    ];
    instances
        .into_iter()
        .map(|(name, inst)| {
            let d = deploy_honest(&inst, &mut rng).expect("fixture is solvable");
            (name.to_string(), inst, d)
        })
        .collect()
}
