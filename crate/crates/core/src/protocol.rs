//! Protocol-agnostic entry points: parse an instance, deploy an honest
//! prover, serialize deployments and run the matching verifier.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cover::{CoverDeployment, CoverProblem};
use crate::dpc::{deploy_dpc, run_dpc_protocol};
use crate::error::{Error, Result};
use crate::flow::{deploy_flow, run_flow_protocol};
use crate::ham::{deploy_ham, run_ham_protocol, HamDeployment};
use crate::instances::{
    dpc_oracle, flow_oracle, ham_oracle, parse_board, parse_dpc, parse_graph, Instance,
};
use crate::transcript::Transcript;
use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProtocolKind {
    Ham,
    Flow,
    Dpc,
}

impl ProtocolKind {
    /// `.graph`, `.flow` or `.dpc`.
    pub fn from_extension(ext: &str) -> Option<Self> {
        match ext {
            "graph" => Some(ProtocolKind::Ham),
            "flow" => Some(ProtocolKind::Flow),
            "dpc" => Some(ProtocolKind::Dpc),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProtocolKind::Ham => "ham",
            ProtocolKind::Flow => "flow",
            ProtocolKind::Dpc => "dpc",
        }
    }

    pub fn parse(self, text: &str) -> Result<Instance> {
        Ok(match self {
            ProtocolKind::Ham => Instance::Ham(parse_graph(text)?),
            ProtocolKind::Flow => Instance::Flow(parse_board(text)?),
            ProtocolKind::Dpc => Instance::Dpc(parse_dpc(text)?),
        })
    }
}

impl Instance {
    pub fn kind(&self) -> ProtocolKind {
        match self {
            Instance::Ham(_) => ProtocolKind::Ham,
            Instance::Flow(_) => ProtocolKind::Flow,
            Instance::Dpc(_) => ProtocolKind::Dpc,
        }
    }

    pub fn cover_problem(&self) -> Option<CoverProblem> {
        match self {
            Instance::Ham(_) => None,
            Instance::Flow(b) => Some(CoverProblem::from_board(b)),
            Instance::Dpc(d) => Some(CoverProblem::from_dpc(d)),
        }
    }

    /// Number of solutions found by the brute-force oracle.
    pub fn solution_count(&self) -> Result<usize> {
        Ok(match self {
            Instance::Ham(g) => ham_oracle(g)?.len(),
            Instance::Flow(b) => flow_oracle(b)?.len(),
            Instance::Dpc(d) => dpc_oracle(d)?.len(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Deployment {
    Ham(HamDeployment),
    Cover(CoverDeployment),
}

impl Deployment {
    pub fn to_text(&self, inst: &Instance) -> String {
        match (self, inst) {
            (Deployment::Ham(d), Instance::Ham(g)) => d.to_text(g),
            (Deployment::Cover(d), _) => match inst.cover_problem() {
                Some(p) => d.to_text(&p),
                None => String::new(),
            },
            _ => String::new(),
        }
    }

    pub fn from_text(inst: &Instance, text: &str) -> Result<Self> {
        match inst {
            Instance::Ham(g) => Ok(Deployment::Ham(HamDeployment::from_text(g, text)?)),
            _ => {
                let p = inst.cover_problem().expect("cover instance");
                Ok(Deployment::Cover(CoverDeployment::from_text(&p, text)?))
            }
        }
    }
}

/// Honest prover: picks one oracle solution at random and deploys it.
pub fn deploy_honest<R: Rng + ?Sized>(inst: &Instance, rng: &mut R) -> Result<Deployment> {
    let none = || Error::InvalidWitness("instance has no solution".into());
    Ok(match inst {
        Instance::Ham(g) => {
            let ws = ham_oracle(g)?;
            Deployment::Ham(deploy_ham(g, ws.choose(rng).ok_or_else(none)?, rng)?)
        }
        Instance::Flow(b) => {
            let ws = flow_oracle(b)?;
            Deployment::Cover(deploy_flow(b, ws.choose(rng).ok_or_else(none)?, rng)?)
        }
        Instance::Dpc(d) => {
            let ws = dpc_oracle(d)?;
            Deployment::Cover(deploy_dpc(d, ws.choose(rng).ok_or_else(none)?, rng)?)
        }
    })
}

/// Runs the verifier matching `inst`.
pub fn run_protocol(inst: &Instance, d: &Deployment, seed: u64) -> Result<(Verdict, Transcript)> {
    match (inst, d) {
        (Instance::Ham(g), Deployment::Ham(d)) => run_ham_protocol(g, d, seed),
        (Instance::Flow(b), Deployment::Cover(d)) => run_flow_protocol(b, d, seed),
        (Instance::Dpc(i), Deployment::Cover(d)) => run_dpc_protocol(i, d, seed),
        _ => Err(Error::NotApplicable("deployment does not match the instance kind".into())),
    }
}
