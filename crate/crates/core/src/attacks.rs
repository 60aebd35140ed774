//! Malicious deployment families used by the soundness tests and the
//! `attack` command.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::cover::{inject_cover, CoverProblem};
use crate::error::{Error, Result};
use crate::ham::{decode_deployment, deploy_ham, inject_deployment};
use crate::instances::{dpc_oracle_with_limit, ham_oracle, DpcInstance, Graph, Instance};
use crate::protocol::{deploy_honest, Deployment};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attack {
    /// Hamiltonian: disjoint even cycles covering every vertex, numbered
    /// 1,2,1,2,... Every vertex check passes; the global check fails.
    TwoCycle,
    /// Hamiltonian: honest cycle numbered 1,2,4,...,n,3.
    Gap,
    /// Hamiltonian: honest deployment plus a cycle heart on a spare edge.
    ExtraHeart,
    /// Path cover: path 1 carries colour 2.
    WrongColumn,
    /// Path cover: a closed loop of four inner sites numbered P+1,P+2,P+1,P+2
    /// beside an honest cover of the remaining sites.
    CycleLoop,
}

impl Attack {
    pub const ALL: [Attack; 5] = [
        Attack::TwoCycle,
        Attack::Gap,
        Attack::ExtraHeart,
        Attack::WrongColumn,
        Attack::CycleLoop,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Attack::TwoCycle => "two-cycle",
            Attack::Gap => "gap",
            Attack::ExtraHeart => "extra-heart",
            Attack::WrongColumn => "wrong-column",
            Attack::CycleLoop => "cycle-loop",
        }
    }
}

impl fmt::Display for Attack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Attack {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Attack::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::NotApplicable(format!("unknown attack {s:?}")))
    }
}

fn not_applicable(attack: Attack, why: &str) -> Error {
    Error::NotApplicable(format!("{attack}: {why}"))
}

/// Builds the malicious deployment for `attack` on `inst`.
pub fn build_attack<R: Rng + ?Sized>(attack: Attack, inst: &Instance, rng: &mut R) -> Result<Deployment> {
    match (attack, inst) {
        (Attack::TwoCycle, Instance::Ham(g)) => two_cycle(g).map(Deployment::Ham),
        (Attack::Gap, Instance::Ham(g)) => gap(g, rng).map(Deployment::Ham),
        (Attack::ExtraHeart, Instance::Ham(g)) => extra_heart(g, rng).map(Deployment::Ham),
        (Attack::WrongColumn, Instance::Flow(_) | Instance::Dpc(_)) => wrong_column(inst, rng),
        (Attack::CycleLoop, Instance::Flow(b)) => cycle_loop(&CoverProblem::from_board(b), &b.to_dpc()),
        (Attack::CycleLoop, Instance::Dpc(d)) => cycle_loop(&CoverProblem::from_dpc(d), d),
        _ => Err(not_applicable(attack, "wrong instance kind")),
    }
}

fn two_cycle(g: &Graph) -> Result<crate::ham::HamDeployment> {
    let mut covered = vec![false; g.n()];
    let mut cycles = Vec::new();
    if !even_cycle_cover(g, &mut covered, &mut cycles) || cycles.len() < 2 {
        return Err(not_applicable(Attack::TwoCycle, "no cover by two or more even cycles"));
    }
    let mut raw = vec![(false, 0); g.edge_count()];
    for cycle in &cycles {
        for i in 0..cycle.len() {
            let e = g.edge_between(cycle[i], cycle[(i + 1) % cycle.len()]).expect("cycle edge");
            raw[e] = (true, 1 + i % 2);
        }
    }
    inject_deployment(g, &raw)
}

/// Covers the uncovered vertices with vertex-disjoint even cycles.
fn even_cycle_cover(g: &Graph, covered: &mut [bool], cycles: &mut Vec<Vec<usize>>) -> bool {
    let Some(start) = covered.iter().position(|&c| !c) else {
        return true;
    };
    let mut path = vec![start];
    covered[start] = true;
    let found = grow_cycle(g, covered, &mut path, cycles);
    covered[start] = false;
    found
}

fn grow_cycle(g: &Graph, covered: &mut [bool], path: &mut Vec<usize>, cycles: &mut Vec<Vec<usize>>) -> bool {
    let (start, last) = (path[0], path[path.len() - 1]);
    if path.len() >= 4 && path.len().is_multiple_of(2) && g.edge_between(last, start).is_some() {
        cycles.push(path.clone());
        if even_cycle_cover(g, covered, cycles) {
            return true;
        }
        cycles.pop();
    }
    for &(w, _) in g.incident(last) {
        // Start is the smallest uncovered vertex, so cycles are found once.
        if !covered[w] && w > start {
            covered[w] = true;
            path.push(w);
            let found = grow_cycle(g, covered, path, cycles);
            path.pop();
            covered[w] = false;
            if found {
                return true;
            }
        }
    }
    false
}

fn honest_cycle<R: Rng + ?Sized>(g: &Graph, attack: Attack, rng: &mut R) -> Result<Vec<(bool, usize)>> {
    let w = ham_oracle(g)?
        .into_iter()
        .next()
        .ok_or_else(|| not_applicable(attack, "graph has no Hamiltonian cycle"))?;
    decode_deployment(&deploy_ham(g, &w, rng)?)
}

fn gap<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<crate::ham::HamDeployment> {
    let n = g.n();
    if n < 4 {
        return Err(not_applicable(Attack::Gap, "needs at least 4 vertices"));
    }
    // 1,2,3,...,n becomes 1,2,4,...,n,3.
    let raw = honest_cycle(g, Attack::Gap, rng)?
        .into_iter()
        .map(|(bit, x)| match x {
            0..=2 => (bit, x),
            x if x == n => (bit, 3),
            _ => (bit, x + 1),
        })
        .collect::<Vec<_>>();
    inject_deployment(g, &raw)
}

fn extra_heart<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<crate::ham::HamDeployment> {
    let mut raw = honest_cycle(g, Attack::ExtraHeart, rng)?;
    let spare = raw
        .iter()
        .position(|&(bit, _)| !bit)
        .ok_or_else(|| not_applicable(Attack::ExtraHeart, "every edge is on the cycle"))?;
    raw[spare].0 = true;
    inject_deployment(g, &raw)
}

fn wrong_column<R: Rng + ?Sized>(inst: &Instance, rng: &mut R) -> Result<Deployment> {
    let p = inst.cover_problem().expect("cover instance");
    if p.k < 2 {
        return Err(not_applicable(Attack::WrongColumn, "needs at least two paths"));
    }
    let Deployment::Cover(d) = deploy_honest(inst, rng).map_err(|_| not_applicable(Attack::WrongColumn, "instance has no solution"))? else {
        unreachable!("cover instance yields a cover deployment")
    };
    let raw: Vec<(usize, usize)> = d
        .decode()?
        .into_iter()
        .map(|(colour, x)| (if colour == 1 { 2 } else { colour }, x))
        .collect();
    Ok(Deployment::Cover(inject_cover(&p, &raw)?))
}

fn cycle_loop(p: &CoverProblem, inst: &DpcInstance) -> Result<Deployment> {
    let g = &p.graph;
    let n = g.n();
    let terminal = |v: usize| inst.sources.contains(&v) || inst.sinks.contains(&v);
    for quad in four_cycles(g) {
        if quad.iter().any(|&v| terminal(v)) {
            continue;
        }
        let keep: Vec<usize> = (0..n).filter(|v| !quad.contains(v)).collect();
        let (sub, edge_map) = g.induced(&keep);
        let local = |v: usize| keep.iter().position(|&k| k == v).expect("kept vertex");
        let rest = DpcInstance::new(
            sub,
            inst.sources.iter().map(|&v| local(v)).collect(),
            inst.sinks.iter().map(|&v| local(v)).collect(),
            inst.paired,
        )?;
        let Some(w) = dpc_oracle_with_limit(&rest, 16)?.into_iter().next() else {
            continue;
        };
        let mut raw = vec![(0, 0); g.edge_count()];
        let mut next = 1;
        for (j, path) in w.paths.iter().enumerate() {
            for pair in path.windows(2) {
                let e = rest.graph.edge_between(pair[0], pair[1]).expect("path edge");
                raw[edge_map[e]] = (j + 1, next);
                next += 1;
            }
        }
        for i in 0..4 {
            let e = g.edge_between(quad[i], quad[(i + 1) % 4]).expect("loop edge");
            raw[e] = (1, next + i % 2);
        }
        return Ok(Deployment::Cover(inject_cover(p, &raw)?));
    }
    Err(not_applicable(Attack::CycleLoop, "no 4-cycle of inner sites beside a cover of the rest"))
}

/// Every 4-cycle `a-b-c-d` once, with `a` smallest and `b < d`.
fn four_cycles(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for &(b, _) in g.incident(a) {
            for &(d, _) in g.incident(a) {
                if b <= a || d <= b {
                    continue;
                }
                for &(c, _) in g.incident(b) {
                    if c > a && c != d && g.edge_between(c, d).is_some() {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}
