//! Physical card-based zero-knowledge proofs for Hamiltonian cycles, Flow
//! Free boards and disjoint path covers, simulated card by card.
//!
//! The prover's deployment is a set of face-down marker stacks; the
//! verifier's checks are sequences of public scrambles, shifts and reveals
//! recorded in a [`Transcript`]. Rejections are [`Verdict`]s, while broken
//! rules of the card model surface as [`Error`]s.

pub mod attacks;
pub mod card;
pub mod cover;
pub mod dpc;
mod engine;
pub mod error;
pub mod fixtures;
pub mod flow;
pub mod ham;
pub mod instances;
pub mod protocol;
pub mod transcript;
pub mod verdict;

pub use attacks::{build_attack, Attack};
pub use card::{decode_marker, encode_marker, Card, CardMatrix, Face, Stack};
pub use cover::{CoverDeployment, CoverProblem};
pub use dpc::{deploy_dpc, run_dpc_protocol, DpcDeployment};
pub use error::{Error, Result};
pub use flow::{card_count, deploy_flow, run_flow_protocol, CardCount, FlowDeployment};
pub use ham::{deploy_ham, run_ham_protocol, HamDeployment};
pub use instances::{
    DpcInstance, DpcWitness, FlowBoard, FlowWitness, Graph, HamWitness, Instance, WitnessCheck,
};
pub use protocol::{deploy_honest, run_protocol, Deployment, ProtocolKind};
pub use transcript::{simulate_public_view, Transcript};
pub use verdict::{Site, Step, Verdict};
