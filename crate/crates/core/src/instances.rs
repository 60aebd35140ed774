//! Problem instances, their text formats, witness validation and the
//! brute-force oracles that anchor completeness and soundness tests.
//!
//! Vertices and cells are 0-based internally; every text format and every
//! transcript uses 1-based numbering.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::error::{parse_err, Error, Result};

pub const HAM_ORACLE_LIMIT: usize = 10;
pub const FLOW_ORACLE_LIMIT: usize = 16;
pub const DPC_ORACLE_LIMIT: usize = 10;

/// Simple undirected graph. Edge ids follow insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a simple graph from 0-based edges, rejecting self-loops,
    /// parallel edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        };
        for (i, (u, v)) in edges.into_iter().enumerate() {
            g.add_edge(u, v).map_err(|msg| parse_err(i + 1, msg))?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> std::result::Result<(), String> {
        if u >= self.n || v >= self.n {
            return Err(format!("vertex out of range 1..{}", self.n));
        }
        if u == v {
            return Err(format!("self-loop at vertex {}", u + 1));
        }
        if self.edge_between(u, v).is_some() {
            return Err(format!("duplicate edge {} {}", u + 1, v + 1));
        }
        let id = self.edges.len();
        self.edges.push((u.min(v), u.max(v)));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        Ok(())
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle graph is simple")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path graph is simple")
    }

    /// Grid graph with vertices row-major and edges in board-wall order.
    pub fn grid(rows: usize, cols: usize) -> Graph {
        FlowBoard::empty(rows, cols).graph()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(neighbour, edge id)` pairs in increasing edge-id order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    /// Induced subgraph on `keep` (in the given order) with the mapping back
    /// to original edge ids.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut sub = Graph {
            n: keep.len(),
            edges: Vec::new(),
            adj: vec![Vec::new(); keep.len()],
        };
        let mut back = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                sub.add_edge(pos[u], pos[v]).expect("subgraph of a simple graph");
                back.push(e);
            }
        }
        (sub, back)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_vertex(tok: &str, line: usize, n: usize) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("expected a vertex number, got {tok:?}")))?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} out of range 1..{n}")));
    }
    Ok(v - 1)
}

/// Parses the edge-list format: `n <count>` followed by one `u v` pair per
/// line, 1-based. Blank lines and `#` comments are ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_graph_lines(content_lines(text))
}

fn parse_graph_lines<'a>(mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Graph> {
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n <count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| parse_err(line, format!("bad vertex count {count:?}")))?,
        _ => return Err(parse_err(line, "expected `n <count>`")),
    };
    if n < 3 {
        return Err(parse_err(line, "graphs need at least 3 vertices"));
    }
    let mut g = Graph {
        n,
        edges: Vec::new(),
        adj: vec![Vec::new(); n],
    };
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = toks[..] else {
            return Err(parse_err(line, "expected `u v`"));
        };
        let u = parse_vertex(u, line, n)?;
        let v = parse_vertex(v, line, n)?;
        g.add_edge(u, v).map_err(|msg| parse_err(line, msg))?;
    }
    Ok(g)
}

/// A Hamiltonian cycle as a cyclic vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HamWitness {
    pub order: Vec<usize>,
}

/// Rectangular Flow Free board with labelled terminal pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowBoard {
    rows: usize,
    cols: usize,
    /// Pair `j` (0-based) is `(label, first cell, second cell)` in row-major
    /// order of appearance.
    pairs: Vec<(char, usize, usize)>,
}

impl FlowBoard {
    fn empty(rows: usize, cols: usize) -> FlowBoard {
        FlowBoard {
            rows,
            cols,
            pairs: Vec::new(),
        }
    }

    /// Builds a board from 0-based `(first, second)` cell pairs.
    pub fn new(rows: usize, cols: usize, pairs: Vec<(char, usize, usize)>) -> Result<FlowBoard> {
        if pairs.is_empty() {
            return Err(parse_err(1, "board needs at least one terminal pair"));
        }
        let mut seen = HashSet::new();
        for &(label, a, b) in &pairs {
            for cell in [a, b] {
                if cell >= rows * cols || !seen.insert(cell) {
                    return Err(parse_err(1, format!("bad terminal cell for pair {label}")));
                }
            }
        }
        Ok(FlowBoard { rows, cols, pairs })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cell_count(&self) -> usize {
        self.rows * self.cols
    }

    /// Number of terminal pairs.
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(char, usize, usize)] {
        &self.pairs
    }

    pub fn cell(&self, r: usize, c: usize) -> usize {
        r * self.cols + c
    }

    pub fn coords(&self, cell: usize) -> (usize, usize) {
        (cell / self.cols, cell % self.cols)
    }

    /// 0-based pair index if `cell` is a terminal.
    pub fn terminal_pair(&self, cell: usize) -> Option<usize> {
        self.pairs
            .iter()
            .position(|&(_, a, b)| a == cell || b == cell)
    }

    /// Walls as cell pairs: for each cell in row-major order, its right wall
    /// then its lower wall.
    pub fn walls(&self) -> Vec<(usize, usize)> {
        let mut walls = Vec::with_capacity(self.wall_count());
        for r in 0..self.rows {
            for c in 0..self.cols {
                let id = self.cell(r, c);
                if c + 1 < self.cols {
                    walls.push((id, id + 1));
                }
                if r + 1 < self.rows {
                    walls.push((id, id + self.cols));
                }
            }
        }
        walls
    }

    pub fn wall_count(&self) -> usize {
        2 * self.rows * self.cols - self.rows - self.cols
    }

    /// Cells as vertices, walls as edges (edge id = wall id).
    pub fn graph(&self) -> Graph {
        Graph::new(self.cell_count(), self.walls()).expect("grid graph is simple")
    }

    /// The equivalent paired disjoint-path-cover instance: first terminals
    /// are sources, second terminals sinks.
    pub fn to_dpc(&self) -> DpcInstance {
        DpcInstance {
            graph: self.graph(),
            sources: self.pairs.iter().map(|p| p.1).collect(),
            sinks: self.pairs.iter().map(|p| p.2).collect(),
            paired: true,
        }
    }

    pub fn to_text(&self) -> String {
        let mut grid = vec!['.'; self.cell_count()];
        for &(label, a, b) in &self.pairs {
            grid[a] = label;
            grid[b] = label;
        }
        grid.chunks(self.cols)
            .map(|row| row.iter().collect::<String>() + "\n")
            .collect()
    }
}

/// Parses the board format: one line per row, `.` for empty cells, and
/// each terminal label (letter or digit) appearing exactly twice.
pub fn parse_board(text: &str) -> Result<FlowBoard> {
    let mut cols = None;
    let mut cells = Vec::new();
    let mut first_line = 1;
    for (line, l) in content_lines(text) {
        if cols.is_none() {
            first_line = line;
        }
        let row: Vec<char> = l.chars().collect();
        match cols {
            None => cols = Some(row.len()),
            Some(c) if c != row.len() => {
                return Err(parse_err(line, format!("ragged row: {} cells, expected {c}", row.len())))
            }
            _ => {}
        }
        for ch in row {
            if ch != '.' && !ch.is_ascii_alphanumeric() {
                return Err(parse_err(line, format!("unexpected character {ch:?}")));
            }
            cells.push((line, ch));
        }
    }
    let cols = cols.ok_or_else(|| parse_err(first_line, "empty board"))?;
    let rows = cells.len() / cols;
    let mut seen: BTreeMap<char, Vec<usize>> = BTreeMap::new();
    let mut order = Vec::new();
    for (i, &(_, ch)) in cells.iter().enumerate() {
        if ch == '.' {
            continue;
        }
        let e = seen.entry(ch).or_default();
        if e.is_empty() {
            order.push(ch);
        }
        e.push(i);
    }
    let mut pairs = Vec::new();
    for label in order {
        let at = &seen[&label];
        if at.len() != 2 {
            let line = cells[at[0]].0;
            return Err(parse_err(
                line,
                format!("label {label:?} appears {} times, expected 2", at.len()),
            ));
        }
        pairs.push((label, at[0], at[1]));
    }
    if pairs.is_empty() {
        return Err(parse_err(first_line, "board has no terminal pairs"));
    }
    FlowBoard::new(rows, cols, pairs)
}

/// One cell path per terminal pair, in pair order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlowWitness {
    pub paths: Vec<Vec<usize>>,
}

impl FlowWitness {
    /// Wall ids traversed by path `j`, in path order.
    pub fn wall_path(&self, board: &FlowBoard, j: usize) -> Vec<usize> {
        let walls = board.walls();
        self.paths[j]
            .windows(2)
            .map(|w| {
                let key = (w[0].min(w[1]), w[0].max(w[1]));
                walls
                    .iter()
                    .position(|&x| x == key)
                    .expect("consecutive cells share a wall")
            })
            .collect()
    }
}

/// Many-to-many k-disjoint path cover instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpcInstance {
    pub graph: Graph,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub paired: bool,
}

impl DpcInstance {
    pub fn new(graph: Graph, sources: Vec<usize>, sinks: Vec<usize>, paired: bool) -> Result<Self> {
        if sources.is_empty() || sources.len() != sinks.len() {
            return Err(parse_err(1, "need k >= 1 sources and as many sinks"));
        }
        let mut seen = HashSet::new();
        for &v in sources.iter().chain(&sinks) {
            if v >= graph.n() || !seen.insert(v) {
                return Err(parse_err(1, format!("terminal vertex {} repeated or out of range", v + 1)));
            }
        }
        Ok(DpcInstance {
            graph,
            sources,
            sinks,
            paired,
        })
    }

    pub fn k(&self) -> usize {
        self.sources.len()
    }

    pub fn to_text(&self) -> String {
        let list = |vs: &[usize]| {
            vs.iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "sources: {}\nsinks: {}\npaired: {}\n{}",
            list(&self.sources),
            list(&self.sinks),
            if self.paired { "yes" } else { "no" },
            self.graph.to_text()
        )
    }
}

/// Parses a DPC instance: the edge-list format plus `sources:`, `sinks:` and
/// `paired: yes|no` header lines (anywhere in the file).
pub fn parse_dpc(text: &str) -> Result<DpcInstance> {
    let mut sources = None;
    let mut sinks = None;
    let mut paired = None;
    let mut rest = Vec::new();
    for (line, l) in content_lines(text) {
        if let Some((key, value)) = l.split_once(':') {
            match key.trim() {
                "sources" => sources = Some((line, value.trim().to_string())),
                "sinks" => sinks = Some((line, value.trim().to_string())),
                "paired" => {
                    paired = Some(match value.trim() {
                        "yes" => true,
                        "no" => false,
                        other => return Err(parse_err(line, format!("paired: expected yes|no, got {other:?}"))),
                    })
                }
                other => return Err(parse_err(line, format!("unknown header {other:?}"))),
            }
        } else {
            rest.push((line, l));
        }
    }
    let graph = parse_graph_lines(rest.into_iter())?;
    let list = |field: Option<(usize, String)>, name: &str| -> Result<Vec<usize>> {
        let (line, value) = field.ok_or_else(|| parse_err(1, format!("missing `{name}:` header")))?;
        value
            .split_whitespace()
            .map(|t| parse_vertex(t, line, graph.n()))
            .collect()
    };
    let sources = list(sources, "sources")?;
    let sinks = list(sinks, "sinks")?;
    let paired = paired.ok_or_else(|| parse_err(1, "missing `paired:` header"))?;
    DpcInstance::new(graph, sources, sinks, paired)
}

/// Vertex paths, path `j` starting at source `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DpcWitness {
    pub paths: Vec<Vec<usize>>,
}

/// Ground-truth witness check.
pub trait WitnessCheck<W> {
    fn validate_witness(&self, witness: &W) -> bool;
}

impl WitnessCheck<HamWitness> for Graph {
    fn validate_witness(&self, w: &HamWitness) -> bool {
        let n = self.n;
        if n < 3 || w.order.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in &w.order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        (0..n).all(|i| self.edge_between(w.order[i], w.order[(i + 1) % n]).is_some())
    }
}

/// Checks that `paths` are vertex-disjoint walks along edges covering every
/// vertex exactly once.
fn disjoint_cover(g: &Graph, paths: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; g.n()];
    for p in paths {
        if p.is_empty() {
            return false;
        }
        for &v in p {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        if p.windows(2).any(|w| g.edge_between(w[0], w[1]).is_none()) {
            return false;
        }
    }
    seen.into_iter().all(|s| s)
}

impl WitnessCheck<FlowWitness> for FlowBoard {
    fn validate_witness(&self, w: &FlowWitness) -> bool {
        if w.paths.len() != self.k() || !disjoint_cover(&self.graph(), &w.paths) {
            return false;
        }
        w.paths.iter().zip(&self.pairs).all(|(p, &(_, a, b))| {
            let (s, t) = (p[0], p[p.len() - 1]);
            p.len() >= 2 && ((s, t) == (a, b) || (s, t) == (b, a))
        })
    }
}

impl WitnessCheck<DpcWitness> for DpcInstance {
    fn validate_witness(&self, w: &DpcWitness) -> bool {
        if w.paths.len() != self.k() || !disjoint_cover(&self.graph, &w.paths) {
            return false;
        }
        let mut used_sinks = HashSet::new();
        w.paths.iter().enumerate().all(|(j, p)| {
            let end = p[p.len() - 1];
            let sink_ok = if self.paired {
                end == self.sinks[j]
            } else {
                self.sinks.contains(&end) && used_sinks.insert(end)
            };
            p.len() >= 2 && p[0] == self.sources[j] && sink_ok
        })
    }
}

/// All Hamiltonian cycles of `g` up to rotation and reflection, with the
/// default size limit.
pub fn ham_oracle(g: &Graph) -> Result<Vec<HamWitness>> {
    ham_oracle_with_limit(g, HAM_ORACLE_LIMIT)
}

/// Canonical form: starts at vertex 0 and its second vertex is smaller than
/// its last.
pub fn ham_oracle_with_limit(g: &Graph, limit: usize) -> Result<Vec<HamWitness>> {
    if g.n() > limit {
        return Err(Error::OracleLimit {
            what: "vertices",
            size: g.n(),
            limit,
        });
    }
    let mut out = Vec::new();
    if g.n() < 3 {
        return Ok(out);
    }
    let mut order = vec![0];
    let mut used = vec![false; g.n()];
    used[0] = true;
    ham_extend(g, &mut order, &mut used, &mut out);
    Ok(out)
}

fn ham_extend(g: &Graph, order: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<HamWitness>) {
    let last = *order.last().expect("non-empty");
    if order.len() == g.n() {
        if g.edge_between(last, 0).is_some() && order[1] < last {
            out.push(HamWitness {
                order: order.clone(),
            });
        }
        return;
    }
    for &(w, _) in g.incident(last) {
        if !used[w] {
            used[w] = true;
            order.push(w);
            ham_extend(g, order, used, out);
            order.pop();
            used[w] = false;
        }
    }
}

/// Every covering path system for `board`, paths oriented from the first
/// terminal of each pair to the second.
pub fn flow_oracle(board: &FlowBoard) -> Result<Vec<FlowWitness>> {
    if board.cell_count() > FLOW_ORACLE_LIMIT {
        return Err(Error::OracleLimit {
            what: "cells",
            size: board.cell_count(),
            limit: FLOW_ORACLE_LIMIT,
        });
    }
    let mut search = GridSearch {
        board,
        owner: vec![None; board.cell_count()],
        paths: Vec::new(),
        out: Vec::new(),
    };
    for &(_, a, b) in &board.pairs {
        search.owner[a] = Some(usize::MAX);
        search.owner[b] = Some(usize::MAX);
    }
    search.start_pair(0);
    let mut out = search.out;
    out.sort();
    Ok(out)
}

struct GridSearch<'a> {
    board: &'a FlowBoard,
    /// `Some(usize::MAX)` marks a terminal not yet reached by its path.
    owner: Vec<Option<usize>>,
    paths: Vec<Vec<usize>>,
    out: Vec<FlowWitness>,
}

impl GridSearch<'_> {
    fn neighbours(&self, cell: usize) -> Vec<usize> {
        let (r, c) = self.board.coords(cell);
        let mut ns = Vec::with_capacity(4);
        if r > 0 {
            ns.push(cell - self.board.cols);
        }
        if c > 0 {
            ns.push(cell - 1);
        }
        if c + 1 < self.board.cols {
            ns.push(cell + 1);
        }
        if r + 1 < self.board.rows {
            ns.push(cell + self.board.cols);
        }
        ns
    }

    fn start_pair(&mut self, j: usize) {
        if j == self.board.k() {
            if self.owner.iter().all(|o| matches!(o, Some(p) if *p != usize::MAX)) {
                self.out.push(FlowWitness {
                    paths: self.paths.clone(),
                });
            }
            return;
        }
        let (_, a, _) = self.board.pairs[j];
        self.owner[a] = Some(j);
        self.paths.push(vec![a]);
        self.walk(j);
        self.paths.pop();
        self.owner[a] = Some(usize::MAX);
    }

    fn walk(&mut self, j: usize) {
        let (_, _, goal) = self.board.pairs[j];
        let here = *self.paths[j].last().expect("path starts at a terminal");
        for next in self.neighbours(here) {
            if next == goal {
                self.owner[goal] = Some(j);
                self.paths[j].push(goal);
                self.start_pair(j + 1);
                self.paths[j].pop();
                self.owner[goal] = Some(usize::MAX);
            } else if self.owner[next].is_none() {
                self.owner[next] = Some(j);
                self.paths[j].push(next);
                self.walk(j);
                self.paths[j].pop();
                self.owner[next] = None;
            }
        }
    }
}

/// Every disjoint path cover of `inst`, with the default size limit.
pub fn dpc_oracle(inst: &DpcInstance) -> Result<Vec<DpcWitness>> {
    dpc_oracle_with_limit(inst, DPC_ORACLE_LIMIT)
}

pub fn dpc_oracle_with_limit(inst: &DpcInstance, limit: usize) -> Result<Vec<DpcWitness>> {
    let n = inst.graph.n();
    if n > limit {
        return Err(Error::OracleLimit {
            what: "vertices",
            size: n,
            limit,
        });
    }
    let mut terminal = vec![false; n];
    for &v in inst.sources.iter().chain(&inst.sinks) {
        terminal[v] = true;
    }
    let mut search = GraphSearch {
        inst,
        terminal,
        used: vec![false; n],
        paths: Vec::new(),
        out: Vec::new(),
    };
    search.start_path(0);
    let mut out = search.out;
    out.sort();
    Ok(out)
}

struct GraphSearch<'a> {
    inst: &'a DpcInstance,
    terminal: Vec<bool>,
    used: Vec<bool>,
    paths: Vec<Vec<usize>>,
    out: Vec<DpcWitness>,
}

impl GraphSearch<'_> {
    fn start_path(&mut self, j: usize) {
        if j == self.inst.k() {
            if self.used.iter().all(|&u| u) {
                self.out.push(DpcWitness {
                    paths: self.paths.clone(),
                });
            }
            return;
        }
        let s = self.inst.sources[j];
        self.used[s] = true;
        self.paths.push(vec![s]);
        self.extend(j);
        self.paths.pop();
        self.used[s] = false;
    }

    fn can_end_at(&self, j: usize, v: usize) -> bool {
        if self.inst.paired {
            v == self.inst.sinks[j]
        } else {
            self.inst.sinks.contains(&v)
        }
    }

    fn extend(&mut self, j: usize) {
        let here = *self.paths[j].last().expect("path starts at its source");
        let g = &self.inst.graph;
        for i in 0..g.degree(here) {
            let next = g.incident(here)[i].0;
            if self.used[next] {
                continue;
            }
            if self.terminal[next] {
                if self.can_end_at(j, next) {
                    self.used[next] = true;
                    self.paths[j].push(next);
                    self.start_path(j + 1);
                    self.paths[j].pop();
                    self.used[next] = false;
                }
            } else {
                self.used[next] = true;
                self.paths[j].push(next);
                self.extend(j);
                self.paths[j].pop();
                self.used[next] = false;
            }
        }
    }
}

/// Any of the three supported problem kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Ham(Graph),
    Flow(FlowBoard),
    Dpc(DpcInstance),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_squares(cross: bool) -> Graph {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)];
        if cross {
            edges.extend([(0, 4), (1, 5)]);
        }
        Graph::new(8, edges).unwrap()
    }

    #[test]
    fn parse_triangle() {
        let g = parse_graph("n 3\n1 2\n1 3\n2 3\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn parse_graph_errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("n 3\n1 1\n"),
            Err(Error::Parse {
                line: 2,
                msg: "self-loop at vertex 1".into()
            })
        );
        assert!(matches!(parse_graph("n 3\n1 2\n# c\n2 1\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(parse_graph("n 3\n1 4\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("n 2\n1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("1 1\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn parse_two_squares_fixture() {
        let text = two_squares(true).to_text();
        let g = parse_graph(&text).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn parse_boards() {
        let b = parse_board("A.B\n...\nA.B\n").unwrap();
        assert_eq!((b.rows(), b.cols(), b.k()), (3, 3, 2));
        assert_eq!(b.pairs(), &[('A', 0, 6), ('B', 2, 8)]);
        let b = parse_board("A.A").unwrap();
        assert_eq!((b.rows(), b.cols(), b.k()), (1, 3, 1));
        assert!(matches!(parse_board("A.."), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_board("A.A\n..\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_board("AAA"), Err(Error::Parse { .. })));
        assert!(parse_board("...").is_err());
    }

    #[test]
    fn board_text_roundtrip() {
        let b = parse_board("A.B\nA.B\n").unwrap();
        assert_eq!(parse_board(&b.to_text()).unwrap(), b);
    }

    #[test]
    fn parse_dpc_instance() {
        let inst = parse_dpc("sources: 1\nsinks: 3\npaired: yes\nn 3\n1 2\n2 3\n").unwrap();
        assert_eq!(inst.sources, vec![0]);
        assert_eq!(inst.sinks, vec![2]);
        assert!(inst.paired);
        assert_eq!(parse_dpc(&inst.to_text()).unwrap(), inst);
        assert!(parse_dpc("sources: 1\nsinks: 1\npaired: no\nn 3\n1 2\n").is_err());
        assert!(parse_dpc("sources: 1\nsinks: 3\nn 3\n1 2\n").is_err());
    }

    #[test]
    fn ham_oracle_examples() {
        assert_eq!(ham_oracle(&Graph::complete(3)).unwrap().len(), 1);
        assert_eq!(ham_oracle(&Graph::complete(4)).unwrap().len(), 3);
        assert!(ham_oracle(&two_squares(false)).unwrap().is_empty());
        assert_eq!(ham_oracle(&two_squares(true)).unwrap().len(), 1);
        assert!(matches!(
            ham_oracle(&Graph::complete(11)),
            Err(Error::OracleLimit { .. })
        ));
    }

    #[test]
    fn ham_oracle_counts_match_factorial_formula() {
        // (n-1)!/2 distinct cycles in K_n
        for (n, expected) in [(3, 1), (4, 3), (5, 12), (6, 60), (7, 360)] {
            assert_eq!(ham_oracle(&Graph::complete(n)).unwrap().len(), expected);
        }
    }

    #[test]
    fn ham_oracle_nonempty_implies_min_degree_two() {
        let graphs = [Graph::complete(5), Graph::cycle(6), two_squares(true), Graph::grid(2, 3)];
        for g in graphs {
            let ws = ham_oracle(&g).unwrap();
            for w in &ws {
                assert!(g.validate_witness(w));
            }
            if !ws.is_empty() {
                assert!((0..g.n()).all(|v| g.degree(v) >= 2));
            }
        }
    }

    #[test]
    fn flow_oracle_examples() {
        let b = parse_board("A.A").unwrap();
        assert_eq!(flow_oracle(&b).unwrap(), vec![FlowWitness { paths: vec![vec![0, 1, 2]] }]);
        let b = parse_board("AB\nAB\n").unwrap();
        assert_eq!(
            flow_oracle(&b).unwrap(),
            vec![FlowWitness { paths: vec![vec![0, 2], vec![1, 3]] }]
        );
        let b = parse_board("A.A\nB..\n..B\n").unwrap();
        let ws = flow_oracle(&b).unwrap();
        assert!(!ws.is_empty());
        assert!(ws.iter().all(|w| b.validate_witness(w)));
        // Corner terminals: both paths would need one more dark square than
        // light, but the board has only one to spare.
        let b = parse_board("A.B\n...\nA.B\n").unwrap();
        assert!(flow_oracle(&b).unwrap().is_empty());
        let big = parse_board("A....\n.....\n.....\n....A\n").unwrap();
        assert!(matches!(flow_oracle(&big), Err(Error::OracleLimit { .. })));
    }

    #[test]
    fn two_solution_board() {
        let b = parse_board("A.B\nA.B\n").unwrap();
        assert_eq!(flow_oracle(&b).unwrap().len(), 2);
    }

    #[test]
    fn validate_witness_rejects_bad_witnesses() {
        let k4 = Graph::complete(4);
        assert!(k4.validate_witness(&HamWitness { order: vec![0, 1, 2, 3] }));
        assert!(!k4.validate_witness(&HamWitness { order: vec![0, 1, 2, 1] }));
        let k3 = Graph::complete(3);
        assert!(k3.validate_witness(&HamWitness { order: vec![0, 1, 2] }));
        let b = parse_board("AB\nAB\n").unwrap();
        assert!(!b.validate_witness(&FlowWitness { paths: vec![vec![0, 2], vec![1]] }));
        assert!(!b.validate_witness(&FlowWitness { paths: vec![vec![0, 2]] }));
        assert!(b.validate_witness(&FlowWitness { paths: vec![vec![2, 0], vec![3, 1]] }));
    }

    #[test]
    fn dpc_oracle_examples() {
        let inst = DpcInstance::new(Graph::path(3), vec![0], vec![2], true).unwrap();
        assert_eq!(dpc_oracle(&inst).unwrap().len(), 1);
        let inst = DpcInstance::new(Graph::path(3), vec![0], vec![1], true).unwrap();
        assert!(dpc_oracle(&inst).unwrap().is_empty());
    }

    #[test]
    fn wall_order_and_counts() {
        let b = parse_board("A.B\n...\nA.B\n").unwrap();
        assert_eq!(b.wall_count(), 12);
        assert_eq!(b.walls().len(), 12);
        assert_eq!(b.walls()[..3], [(0, 1), (0, 3), (1, 2)]);
        let w = FlowWitness { paths: vec![vec![0, 3, 6], vec![2, 5, 8]] };
        assert_eq!(w.wall_path(&b, 0), vec![1, 6]);
    }
}
