//! Path-cover protocol shared by Flow Free and disjoint path covers: type I
//! (colour) and type II (sequence number) stacks on every edge, terminal and
//! non-terminal site checks, and the global one-heart-per-row check.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::card::{decode_marker, encode_marker, Axis, CardMatrix, Region, Stack};
use crate::engine::{adjacency_check, Table, CELL_ADJACENCY};
use crate::error::{violation, Error, Result};
use crate::ham::parse_edge_stacks;
use crate::instances::{DpcInstance, FlowBoard, Graph};
use crate::transcript::{Action, PrivateKind, Scope, Transcript};
use crate::verdict::{Site, Step, Verdict};

/// How a site is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Endpoint of path `j` (0-based); its heart must sit in column `j`.
    Terminal(usize),
    /// Endpoint whose path label is hidden by a column scramble.
    BlindTerminal,
    Inner,
}

/// Public data of a path-cover instance: the graph, each site's role and
/// the number of paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverProblem {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub k: usize,
    /// Board width when sites are grid cells.
    cols: Option<usize>,
    protocol: &'static str,
}

impl CoverProblem {
    pub fn from_board(board: &FlowBoard) -> Self {
        let mut roles = vec![Role::Inner; board.cell_count()];
        for (j, &(_, a, b)) in board.pairs().iter().enumerate() {
            roles[a] = Role::Terminal(j);
            roles[b] = Role::Terminal(j);
        }
        CoverProblem {
            graph: board.graph(),
            roles,
            k: board.k(),
            cols: Some(board.cols()),
            protocol: "flow",
        }
    }

    pub fn from_dpc(inst: &DpcInstance) -> Self {
        let mut roles = vec![Role::Inner; inst.graph.n()];
        for (j, &s) in inst.sources.iter().enumerate() {
            roles[s] = Role::Terminal(j);
        }
        for (j, &t) in inst.sinks.iter().enumerate() {
            roles[t] = if inst.paired { Role::Terminal(j) } else { Role::BlindTerminal };
        }
        CoverProblem {
            graph: inst.graph.clone(),
            roles,
            k: inst.k(),
            cols: None,
            protocol: "dpc",
        }
    }

    /// Type II stack length: the number of edges a cover uses.
    pub fn modulus(&self) -> usize {
        self.graph.n() - self.k
    }

    pub fn site(&self, v: usize) -> Site {
        match self.cols {
            Some(c) => Site::Cell(v / c, v % c),
            None => Site::Vertex(v),
        }
    }

    pub fn protocol(&self) -> &'static str {
        self.protocol
    }

    /// Site ids in checking order: terminals first, then inner sites, each
    /// ascending.
    pub fn check_order(&self) -> Vec<usize> {
        let n = self.graph.n();
        let terminal = |v: &usize| self.roles[*v] != Role::Inner;
        (0..n).filter(terminal).chain((0..n).filter(|v| !terminal(v))).collect()
    }
}

/// Face-down type I and type II stacks per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverDeployment {
    pub type1: Vec<Stack>,
    pub type2: Vec<Stack>,
}

impl CoverDeployment {
    pub fn check_shape(&self, p: &CoverProblem) -> Result<()> {
        let e = p.graph.edge_count();
        if self.type1.len() != e || self.type2.len() != e {
            return Err(violation("deployment does not cover every edge exactly once"));
        }
        for (i, (a, b)) in self.type1.iter().zip(&self.type2).enumerate() {
            if a.len() != p.k || b.len() != p.modulus() {
                return Err(violation(format!("edge {} carries stacks of the wrong size", i + 1)));
            }
            if !(a.is_marker() && b.is_marker() && a.is_face_down() && b.is_face_down()) {
                return Err(violation(format!("edge {} stacks are not face-down markers", i + 1)));
            }
        }
        Ok(())
    }

    /// One line per edge: `u v <type I> <type II>`, 1-based site ids.
    pub fn to_text(&self, p: &CoverProblem) -> String {
        let mut out = String::new();
        for (e, &(u, v)) in p.graph.edges().iter().enumerate() {
            let _ = writeln!(out, "{} {} {} {}", u + 1, v + 1, self.type1[e], self.type2[e]);
        }
        out
    }

    pub fn from_text(p: &CoverProblem, text: &str) -> Result<Self> {
        let (type1, type2) = parse_edge_stacks(&p.graph, text)?;
        let d = CoverDeployment { type1, type2 };
        d.check_shape(p)?;
        Ok(d)
    }

    /// Per-edge `(colour, number)`; colour 0 and number 0 mean unused.
    pub fn decode(&self) -> Result<Vec<(usize, usize)>> {
        self.type1
            .iter()
            .zip(&self.type2)
            .map(|(a, b)| Ok((decode_marker(a)?, decode_marker(b)?)))
            .collect()
    }
}

/// Builds a deployment from per-edge `(colour, number)` pairs, colour in
/// `0..=k` and number in `0..=modulus`.
pub fn inject_cover(p: &CoverProblem, raw: &[(usize, usize)]) -> Result<CoverDeployment> {
    if raw.len() != p.graph.edge_count() {
        return Err(violation("one (colour, number) pair per edge required"));
    }
    let mut type1 = Vec::with_capacity(raw.len());
    let mut type2 = Vec::with_capacity(raw.len());
    for &(colour, number) in raw {
        type1.push(encode_marker(p.k, colour)?);
        type2.push(encode_marker(p.modulus(), number)?);
    }
    Ok(CoverDeployment { type1, type2 })
}

/// Honest deployment for vertex paths, `paths[j]` carrying colour `j + 1`.
/// Paths are numbered consecutively in random order and direction.
pub(crate) fn deploy_paths<R: Rng + ?Sized>(
    p: &CoverProblem,
    paths: &[Vec<usize>],
    rng: &mut R,
) -> Result<CoverDeployment> {
    let mut raw = vec![(0, 0); p.graph.edge_count()];
    let mut order: Vec<usize> = (0..paths.len()).collect();
    order.shuffle(rng);
    let mut next = 1;
    for j in order {
        let mut path = paths[j].clone();
        if rng.gen::<bool>() {
            path.reverse();
        }
        for w in path.windows(2) {
            let e = p
                .graph
                .edge_between(w[0], w[1])
                .ok_or_else(|| Error::InvalidWitness(format!("no edge {} {}", w[0] + 1, w[1] + 1)))?;
            raw[e] = (j + 1, next);
            next += 1;
        }
    }
    inject_cover(p, &raw)
}

fn edges_at(p: &CoverProblem, v: usize) -> Vec<usize> {
    p.graph.incident(v).iter().map(|&(_, e)| e).collect()
}

/// Deals each type I stack across one row, columns `1..=k`.
fn deal_rows(m: &mut CardMatrix, d: &CoverDeployment, edges: &[usize]) {
    let row0 = m.data_rows().start;
    for (i, &e) in edges.iter().enumerate() {
        for (c, card) in d.type1[e].cards().iter().enumerate() {
            m.place(row0 + i, 1 + c, Stack::single(*card));
        }
    }
}

fn gather_row(m: &mut CardMatrix, r: usize, k: usize) -> Stack {
    (1..=k).flat_map(|c| m.take(r, c).cards().to_vec()).collect()
}

/// Checks one terminal site. Labelled terminals accept iff exactly one heart
/// shows and it lies in the label's column; blind terminals scramble the
/// columns first and accept any single heart.
pub fn check_terminal<R: Rng + ?Sized>(
    p: &CoverProblem,
    d: &mut CoverDeployment,
    v: usize,
    rng: &mut R,
    t: &mut Transcript,
) -> Result<Verdict> {
    let label = match p.roles[v] {
        Role::Terminal(j) => Some(j),
        Role::BlindTerminal => None,
        Role::Inner => return Err(violation(format!("{} is not a terminal", p.site(v)))),
    };
    let site = p.site(v);
    let mut table = Table {
        rng,
        t,
        scope: Scope::Site(site),
    };
    let edges = edges_at(p, v);
    let k = p.k;
    let mut m = CardMatrix::new(edges.len(), k, label.is_none(), true);
    deal_rows(&mut m, d, &edges);
    table.build("TERMINAL_STEP1", &m);
    table.scramble_rows("TERMINAL_STEP2", &mut m)?;
    if label.is_none() {
        table.scramble_cols("TERMINAL_STEP2", &mut m, 1..k + 1)?;
    }
    let colours = Region::new(m.data_rows(), 1..k + 1);
    let seen = table.reveal("TERMINAL_STEP3", &mut m, &colours);
    let hearts = seen.heart_cells();
    let accepted = match (hearts.as_slice(), label) {
        ([(_, c)], Some(j)) => *c == j,
        ([_], None) => true,
        _ => false,
    };
    table.decide("TERMINAL_STEP3", accepted);
    if !accepted {
        return Ok(Verdict::reject(Step::Terminal, Some(site)));
    }

    table.hide_all("TERMINAL_STEP4", &mut m);
    table.scramble_rows("TERMINAL_STEP4", &mut m)?;
    if label.is_none() {
        table.scramble_cols("TERMINAL_STEP4", &mut m, 1..k + 1)?;
        table.restore("TERMINAL_STEP4", &mut m, Axis::Columns)?;
    }
    table.restore("TERMINAL_STEP4", &mut m, Axis::Rows)?;
    m.turn_all_face_down();
    let row0 = m.data_rows().start;
    for (i, &e) in edges.iter().enumerate() {
        d.type1[e] = gather_row(&mut m, row0 + i, k);
    }
    table.event("TERMINAL_STEP5", Action::Redeploy, format!("{} edges", edges.len()));
    Ok(Verdict::accept(Step::Terminal, Some(site)))
}

/// Checks one non-terminal site: two hearts in one colour column, then
/// consecutive type II numbers on those two edges.
pub fn check_inner<R: Rng + ?Sized>(
    p: &CoverProblem,
    d: &mut CoverDeployment,
    v: usize,
    rng: &mut R,
    t: &mut Transcript,
) -> Result<Verdict> {
    let site = p.site(v);
    let mut table = Table {
        rng,
        t,
        scope: Scope::Site(site),
    };
    let edges = edges_at(p, v);
    let k = p.k;
    let mut m = CardMatrix::new(edges.len(), k + 1, true, true);
    deal_rows(&mut m, d, &edges);
    for (i, &e) in edges.iter().enumerate() {
        m.place(1 + i, k + 1, d.type2[e].clone());
    }
    table.build("CELL_STEP1", &m);
    table.scramble_rows("CELL_STEP2", &mut m)?;
    table.scramble_cols("CELL_STEP2", &mut m, 1..k + 1)?;
    let colours = Region::new(m.data_rows(), 1..k + 1);
    let seen = table.reveal("CELL_STEP3", &mut m, &colours);
    let pair = match seen.heart_cells()[..] {
        [(r1, c1), (r2, c2)] if c1 == c2 && r1 != r2 => Some((1 + r1, 1 + r2)),
        _ => None,
    };
    let Some((i, j)) = pair else {
        table.decide("CELL_STEP3", false);
        return Ok(Verdict::reject(Step::CellPairing, Some(site)));
    };

    let upper = m.take(i, k + 1);
    let lower = m.take(j, k + 1);
    let Some((_, upper, lower)) = adjacency_check(&mut table, &CELL_ADJACENCY, upper, lower)? else {
        table.decide("CELL_STEP5", false);
        return Ok(Verdict::reject(Step::CellAdjacency, Some(site)));
    };
    table.decide("CELL_STEP5", true);
    m.place(i, k + 1, upper);
    m.place(j, k + 1, lower);

    table.event("CELL_STEP9", Action::Restack, format!("col {}", k + 1));
    table.hide_all("CELL_STEP9", &mut m);
    table.scramble_rows("CELL_STEP9", &mut m)?;
    table.scramble_cols("CELL_STEP9", &mut m, 1..k + 1)?;
    table.restore("CELL_STEP9", &mut m, Axis::Columns)?;
    table.restore("CELL_STEP9", &mut m, Axis::Rows)?;
    m.turn_all_face_down();
    for (i, &e) in edges.iter().enumerate() {
        d.type1[e] = gather_row(&mut m, 1 + i, k);
        d.type2[e] = m.take(1 + i, k + 1);
    }
    table.event("CELL_STEP10", Action::Redeploy, format!("{} edges", edges.len()));
    Ok(Verdict::accept(Step::CellAdjacency, Some(site)))
}

/// Lays every type II stack out as a column, scrambles the columns and
/// accepts iff each row shows exactly one heart.
pub fn cover_global_check<R: Rng + ?Sized>(
    p: &CoverProblem,
    d: &CoverDeployment,
    rng: &mut R,
    t: &mut Transcript,
) -> Result<Verdict> {
    let mut table = Table {
        rng,
        t,
        scope: Scope::Global,
    };
    let w = p.graph.edge_count();
    let mut m = CardMatrix::new(p.modulus(), w, false, false);
    for (c, s) in d.type2.iter().enumerate() {
        m.lay_out(c, s.clone())?;
    }
    table.build("GLOBAL_STEP1", &m);
    table.scramble_cols("GLOBAL_STEP1", &mut m, 0..w)?;
    let seen = table.reveal("GLOBAL_STEP2", &mut m, &Region::new(0..p.modulus(), 0..w));
    let mut per_row = vec![0usize; p.modulus()];
    for (r, _) in seen.heart_cells() {
        per_row[r] += 1;
    }
    let accepted = per_row.iter().all(|&h| h == 1);
    table.decide("GLOBAL_STEP2", accepted);
    Ok(if accepted {
        Verdict::accept(Step::Global, None)
    } else {
        Verdict::reject(Step::Global, None)
    })
}

/// Full run: terminal sites, inner sites, global check; first rejection ends
/// the run.
pub fn run_cover_protocol(p: &CoverProblem, d: &CoverDeployment, seed: u64) -> Result<(Verdict, Transcript)> {
    d.check_shape(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Transcript::new(p.protocol, seed);
    t.push_private(Scope::Global, "DEPLOY", PrivateKind::Layout(d.to_text(p)));
    let mut working = d.clone();
    for v in p.check_order() {
        let verdict = match p.roles[v] {
            Role::Inner => check_inner(p, &mut working, v, &mut rng, &mut t)?,
            _ => check_terminal(p, &mut working, v, &mut rng, &mut t)?,
        };
        if !verdict.accepted {
            t.set_verdict(verdict);
            return Ok((verdict, t));
        }
    }
    let verdict = cover_global_check(p, &working, &mut rng, &mut t)?;
    let verdict = if verdict.accepted { Verdict::accept_all() } else { verdict };
    t.set_verdict(verdict);
    Ok((verdict, t))
}
