//! Bundled instances used by the tests, benches and examples.

use crate::instances::{parse_board, parse_dpc, parse_graph, DpcInstance, FlowBoard, Graph};

macro_rules! fixture {
    ($name:literal, $ext:literal) => {
        ($name, include_str!(concat!("../fixtures/", $name, ".", $ext)))
    };
}

pub const GRAPHS: &[(&str, &str)] = &[
    fixture!("k3", "graph"),
    fixture!("k4", "graph"),
    fixture!("k5", "graph"),
    fixture!("c5", "graph"),
    fixture!("prism", "graph"),
    fixture!("cube", "graph"),
    fixture!("wheel", "graph"),
    fixture!("fig3", "graph"),
    fixture!("two-squares", "graph"),
];

pub const BOARDS: &[(&str, &str)] = &[
    fixture!("line", "flow"),
    fixture!("adjacent", "flow"),
    fixture!("ab", "flow"),
    fixture!("two-solution", "flow"),
    fixture!("board3x3", "flow"),
    fixture!("corner", "flow"),
    fixture!("loop", "flow"),
    fixture!("wide", "flow"),
];

pub const DPC: &[(&str, &str)] = &[
    fixture!("path3", "dpc"),
    fixture!("grid-straight", "dpc"),
    fixture!("grid-paired", "dpc"),
    fixture!("grid-unpaired", "dpc"),
    fixture!("c6-crossing", "dpc"),
];

fn lookup(table: &[(&str, &'static str)], name: &str) -> &'static str {
    table
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .unwrap_or_else(|| panic!("no fixture named {name:?}"))
}

/// Panics on unknown names: fixtures are compiled in.
pub fn graph(name: &str) -> Graph {
    parse_graph(lookup(GRAPHS, name)).expect("fixture parses")
}

pub fn board(name: &str) -> FlowBoard {
    parse_board(lookup(BOARDS, name)).expect("fixture parses")
}

pub fn dpc(name: &str) -> DpcInstance {
    parse_dpc(lookup(DPC, name)).expect("fixture parses")
}

pub fn graphs() -> impl Iterator<Item = (&'static str, Graph)> {
    GRAPHS.iter().map(|&(n, _)| (n, graph(n)))
}

pub fn boards() -> impl Iterator<Item = (&'static str, FlowBoard)> {
    BOARDS.iter().map(|&(n, _)| (n, board(n)))
}

pub fn dpc_instances() -> impl Iterator<Item = (&'static str, DpcInstance)> {
    DPC.iter().map(|&(n, _)| (n, dpc(n)))
}
