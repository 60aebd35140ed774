//! Public-view simulator. Produces an accepting transcript from public data
//! alone by drawing every reveal from its honest-run distribution.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Action, Scope, Transcript};
use crate::cover::{CoverProblem, Role};
use crate::instances::{Graph, Instance};
use crate::verdict::{Site, Verdict};

struct Sim {
    rng: ChaCha8Rng,
    t: Transcript,
    scope: Scope,
}

impl Sim {
    fn emit(&mut self, step: &'static str, action: Action, detail: impl Into<String>) {
        self.t.push_public(self.scope, step, action, detail);
    }

    fn scramble_rows(&mut self, step: &'static str, from: usize, to: usize) {
        self.emit(step, Action::ScrambleRows, format!("{from}..{to}"));
    }

    fn scramble_cols(&mut self, step: &'static str, from: usize, to: usize) {
        self.emit(step, Action::ScrambleCols, format!("{from}..{to}"));
    }

    fn hide_all(&mut self, step: &'static str) {
        self.emit(step, Action::Hide, "all");
    }

    /// Fresh scramble followed by an index reveal: a uniform permutation.
    fn restore_rows(&mut self, step: &'static str, n: usize) {
        let perm = self.permutation(n);
        self.emit(step, Action::RevealIndex, join(&perm, " / "));
        self.emit(step, Action::Restore, "rows");
    }

    fn restore_cols(&mut self, step: &'static str, mut perm: Vec<String>) {
        perm.shuffle(&mut self.rng);
        self.emit(step, Action::RevealIndex, perm.join(" "));
        self.emit(step, Action::Restore, "cols");
    }

    fn permutation(&mut self, n: usize) -> Vec<String> {
        let mut v: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        v.shuffle(&mut self.rng);
        v
    }

    /// Reveal of two stacked columns after the row scramble, given whether
    /// the hearts line up.
    fn adjacency_reveal(&mut self, step: &'static str, n: usize, aligned: bool) {
        let mut rows = vec!["S S"; n];
        if aligned {
            rows[self.rng.gen_range(0..n)] = "H H";
        } else {
            let pick = index::sample(&mut self.rng, n, 2);
            rows[pick.index(0)] = "H S";
            rows[pick.index(1)] = "S H";
        }
        self.emit(step, Action::Reveal, rows.join(" / "));
    }

    /// Consecutive-number test on two stacks of `n` cards. Returns whether
    /// the first test matched.
    fn adjacency(&mut self, labels: [&'static str; 4], n: usize) -> bool {
        let [build, shift, first, second] = labels;
        self.emit(build, Action::Build, format!("{n}x3"));
        self.emit(shift, Action::ShiftDown, "col 2");
        // The row scramble decides which number sits in the upper column.
        let first_match = n <= 2 || self.rng.gen_bool(0.5);
        self.scramble_rows(first, 0, n);
        self.adjacency_reveal(first, n, first_match);
        self.hide_all(first);
        self.scramble_rows(first, 0, n);
        self.restore_rows(first, n);
        self.emit(first, Action::ShiftUp, "col 2");
        if !first_match {
            self.emit(second, Action::ShiftUp, "col 2");
            self.emit(second, Action::Hide, "index");
            self.scramble_rows(second, 0, n);
            self.adjacency_reveal(second, n, true);
            self.hide_all(second);
            self.scramble_rows(second, 0, n);
            self.restore_rows(second, n);
            self.emit(second, Action::ShiftDown, "col 2");
        }
        first_match
    }

    fn finish(mut self) -> Transcript {
        self.t.set_verdict(Verdict::accept_all());
        self.t
    }
}

fn join(cells: &[String], sep: &str) -> String {
    cells.join(sep)
}

/// Grid of single cards, hearts at the given `(row, col)` cells.
fn card_grid(rows: usize, cols: usize, hearts: &[(usize, usize)]) -> String {
    (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| if hearts.contains(&(r, c)) { "H" } else { "S" })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

fn marker(len: usize, pos: usize) -> String {
    (1..=len).map(|p| if p == pos { 'H' } else { 'S' }).collect()
}

fn simulate_ham(g: &Graph, seed: u64) -> Transcript {
    let mut s = Sim {
        rng: ChaCha8Rng::seed_from_u64(seed),
        t: Transcript::new("ham", seed),
        scope: Scope::Global,
    };
    let n = g.n();
    for v in 0..n {
        s.scope = Scope::Site(Site::Vertex(v));
        let d = g.degree(v);
        s.emit("STEP3", Action::Build, format!("{d}x3"));
        s.scramble_rows("STEP4", 0, d);
        let pick = index::sample(&mut s.rng, d, 2);
        let hearts = [(pick.index(0), 0), (pick.index(1), 0)];
        s.emit("STEP4", Action::Reveal, card_grid(d, 1, &hearts));
        let first = s.adjacency(["STEP5", "STEP6", "STEP7", "STEP8"], n);
        s.emit("STEP9", Action::Restack, "col 2");
        s.hide_all("STEP9");
        s.scramble_rows("STEP9", 0, d);
        s.restore_rows("STEP9", d);
        s.emit("STEP9", Action::Redeploy, format!("{d} edges"));
        s.emit(if first { "STEP7" } else { "STEP8" }, Action::Decide, "accept");
    }
    s.scope = Scope::Global;
    let e = g.edge_count();
    s.emit("STEP11", Action::Build, format!("{e}x1"));
    s.scramble_rows("STEP11", 0, e);
    let mut column: Vec<String> = (0..e).map(|i| marker(n, if i < n { i + 1 } else { 0 })).collect();
    column.shuffle(&mut s.rng);
    s.emit("STEP11", Action::Reveal, column.join(" / "));
    s.emit("STEP11", Action::Decide, "accept");
    s.finish()
}

fn simulate_cover(p: &CoverProblem, seed: u64) -> Transcript {
    let mut s = Sim {
        rng: ChaCha8Rng::seed_from_u64(seed),
        t: Transcript::new(p.protocol(), seed),
        scope: Scope::Global,
    };
    let k = p.k;
    let modulus = p.modulus();
    let col_labels = |n: usize| (1..=n).map(|i| i.to_string()).collect::<Vec<_>>();
    for v in p.check_order() {
        s.scope = Scope::Site(p.site(v));
        let r = p.graph.degree(v);
        match p.roles[v] {
            Role::Terminal(_) | Role::BlindTerminal => {
                let blind = p.roles[v] == Role::BlindTerminal;
                let top = usize::from(blind);
                s.emit("TERMINAL_STEP1", Action::Build, format!("{}x{}", r + top, k + 1));
                s.scramble_rows("TERMINAL_STEP2", top, r + top);
                if blind {
                    s.scramble_cols("TERMINAL_STEP2", 1, k + 1);
                }
                let row = s.rng.gen_range(0..r);
                let col = match p.roles[v] {
                    Role::Terminal(j) => j,
                    _ => s.rng.gen_range(0..k),
                };
                s.emit("TERMINAL_STEP3", Action::Reveal, card_grid(r, k, &[(row, col)]));
                s.emit("TERMINAL_STEP3", Action::Decide, "accept");
                s.hide_all("TERMINAL_STEP4");
                s.scramble_rows("TERMINAL_STEP4", top, r + top);
                if blind {
                    s.scramble_cols("TERMINAL_STEP4", 1, k + 1);
                    s.restore_cols("TERMINAL_STEP4", col_labels(k));
                }
                s.restore_rows("TERMINAL_STEP4", r);
                s.emit("TERMINAL_STEP5", Action::Redeploy, format!("{r} edges"));
            }
            Role::Inner => {
                s.emit("CELL_STEP1", Action::Build, format!("{}x{}", r + 1, k + 2));
                s.scramble_rows("CELL_STEP2", 1, r + 1);
                s.scramble_cols("CELL_STEP2", 1, k + 1);
                let col = s.rng.gen_range(0..k);
                let pick = index::sample(&mut s.rng, r, 2);
                let hearts = [(pick.index(0), col), (pick.index(1), col)];
                s.emit("CELL_STEP3", Action::Reveal, card_grid(r, k, &hearts));
                s.adjacency(["CELL_STEP4", "CELL_STEP5.6", "CELL_STEP5.7", "CELL_STEP5.8"], modulus);
                s.emit("CELL_STEP5", Action::Decide, "accept");
                s.emit("CELL_STEP9", Action::Restack, format!("col {}", k + 1));
                s.hide_all("CELL_STEP9");
                s.scramble_rows("CELL_STEP9", 1, r + 1);
                s.scramble_cols("CELL_STEP9", 1, k + 1);
                // The type II column is never scrambled, so its index stays last.
                let mut cols = col_labels(k);
                cols.shuffle(&mut s.rng);
                cols.push((k + 1).to_string());
                s.emit("CELL_STEP9", Action::RevealIndex, cols.join(" "));
                s.emit("CELL_STEP9", Action::Restore, "cols");
                s.restore_rows("CELL_STEP9", r);
                s.emit("CELL_STEP10", Action::Redeploy, format!("{r} edges"));
            }
        }
    }
    s.scope = Scope::Global;
    let w = p.graph.edge_count();
    s.emit("GLOBAL_STEP1", Action::Build, format!("{modulus}x{w}"));
    s.scramble_cols("GLOBAL_STEP1", 0, w);
    let mut order: Vec<usize> = (0..w).map(|c| if c < modulus { c + 1 } else { 0 }).collect();
    order.shuffle(&mut s.rng);
    let hearts: Vec<(usize, usize)> = order
        .iter()
        .enumerate()
        .filter(|&(_, &x)| x > 0)
        .map(|(c, &x)| (x - 1, c))
        .collect();
    s.emit("GLOBAL_STEP2", Action::Reveal, card_grid(modulus, w, &hearts));
    s.emit("GLOBAL_STEP2", Action::Decide, "accept");
    s.finish()
}

/// Accepting transcript drawn from public data only: the instance shape and
/// the seed. Requires a satisfiable instance to be meaningful.
pub fn simulate_public_view(instance: &Instance, seed: u64) -> Transcript {
    match instance {
        Instance::Ham(g) => simulate_ham(g, seed),
        Instance::Flow(b) => simulate_cover(&CoverProblem::from_board(b), seed),
        Instance::Dpc(d) => simulate_cover(&CoverProblem::from_dpc(d), seed),
    }
}
