use std::fmt;

/// The place a local check runs at. Displayed 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Site {
    Vertex(usize),
    /// `(row, col)`, 0-based.
    Cell(usize, usize),
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Vertex(v) => write!(f, "vertex {}", v + 1),
            Site::Cell(r, c) => write!(f, "cell {},{}", r + 1, c + 1),
        }
    }
}

/// Protocol step that decided a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Hamiltonian: wrong number of cycle hearts at a vertex.
    Step4,
    /// Hamiltonian: vertex accepted by the first adjacency test.
    Step7,
    /// Hamiltonian: second adjacency test (accept or reject).
    Step8,
    /// Hamiltonian: global uniqueness of edge numbers.
    Step11,
    /// Path cover: terminal cell/vertex colour check.
    Terminal,
    /// Path cover: two same-colour hearts at a non-terminal site.
    CellPairing,
    /// Path cover: consecutive-number test at a non-terminal site.
    CellAdjacency,
    /// Path cover: one heart per row over all type II stacks.
    Global,
    AcceptAll,
}

impl Step {
    pub fn label(self) -> &'static str {
        match self {
            Step::Step4 => "STEP4",
            Step::Step7 => "STEP7",
            Step::Step8 => "STEP8",
            Step::Step11 => "STEP11",
            Step::Terminal => "TERMINAL_STEP3",
            Step::CellPairing => "CELL_STEP3",
            Step::CellAdjacency => "CELL_STEP5",
            Step::Global => "GLOBAL_STEP2",
            Step::AcceptAll => "ACCEPT_ALL",
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Verdict {
    pub accepted: bool,
    pub step: Step,
    pub site: Option<Site>,
}

impl Verdict {
    pub fn accept(step: Step, site: Option<Site>) -> Self {
        Verdict {
            accepted: true,
            step,
            site,
        }
    }

    pub fn reject(step: Step, site: Option<Site>) -> Self {
        Verdict {
            accepted: false,
            step,
            site,
        }
    }

    pub fn accept_all() -> Self {
        Verdict::accept(Step::AcceptAll, None)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = if self.accepted { "accept" } else { "reject" };
        match self.site {
            Some(site) => write!(f, "{what} at {} ({site})", self.step),
            None => write!(f, "{what} at {}", self.step),
        }
    }
}
