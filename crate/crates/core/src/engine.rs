//! Public table manipulations with transcript logging, and the
//! consecutive-number sub-protocol shared by the Hamiltonian vertex check and
//! the non-terminal cell check.

use rand::Rng;

use crate::card::{Axis, CardMatrix, Observation, Region, Shift, Stack};
use crate::error::Result;
use crate::transcript::{Action, PrivateKind, Scope, Transcript};

/// A matrix being manipulated in front of the verifier. Every call records
/// its public effect; scrambles also record the drawn permutation privately.
pub(crate) struct Table<'a, R: Rng + ?Sized> {
    pub rng: &'a mut R,
    pub t: &'a mut Transcript,
    pub scope: Scope,
}

impl<R: Rng + ?Sized> Table<'_, R> {
    pub fn event(&mut self, step: &'static str, action: Action, detail: impl Into<String>) {
        self.t.push_public(self.scope, step, action, detail);
    }

    pub fn build(&mut self, step: &'static str, m: &CardMatrix) {
        self.event(step, Action::Build, format!("{}x{}", m.rows(), m.cols()));
    }

    pub fn hide_all(&mut self, step: &'static str, m: &mut CardMatrix) {
        m.turn_all_face_down();
        self.event(step, Action::Hide, "all");
    }

    pub fn hide_index(&mut self, step: &'static str, m: &mut CardMatrix) {
        let region = m.index_column();
        m.turn_face_down(&region);
        self.event(step, Action::Hide, "index");
    }

    pub fn scramble_rows(&mut self, step: &'static str, m: &mut CardMatrix) -> Result<()> {
        let rows = m.data_rows();
        let perm = m.row_scramble(rows.clone(), self.rng)?;
        self.event(step, Action::ScrambleRows, format!("{}..{}", rows.start, rows.end));
        self.t.push_private(self.scope, step, PrivateKind::Permutation(perm));
        Ok(())
    }

    pub fn scramble_cols(&mut self, step: &'static str, m: &mut CardMatrix, cols: std::ops::Range<usize>) -> Result<()> {
        let perm = m.column_scramble(cols.clone(), self.rng)?;
        self.event(step, Action::ScrambleCols, format!("{}..{}", cols.start, cols.end));
        self.t.push_private(self.scope, step, PrivateKind::Permutation(perm));
        Ok(())
    }

    pub fn shift(&mut self, step: &'static str, m: &mut CardMatrix, col: usize, dir: Shift) {
        m.cyclic_shift(col, dir);
        let action = match dir {
            Shift::Down => Action::ShiftDown,
            Shift::Up => Action::ShiftUp,
        };
        self.event(step, action, format!("col {col}"));
    }

    pub fn reveal(&mut self, step: &'static str, m: &mut CardMatrix, region: &Region) -> Observation {
        let obs = m.reveal(region);
        self.event(step, Action::Reveal, obs.pattern());
        obs
    }

    /// Turns the index cards of `axis` face up and sorts the matrix back.
    pub fn restore(&mut self, step: &'static str, m: &mut CardMatrix, axis: Axis) -> Result<()> {
        let region = match axis {
            Axis::Rows => m.index_column(),
            Axis::Columns => m.index_row(),
        };
        let obs = m.reveal(&region);
        self.event(step, Action::RevealIndex, obs.pattern());
        m.restore_by_index(axis)?;
        let what = match axis {
            Axis::Rows => "rows",
            Axis::Columns => "cols",
        };
        self.event(step, Action::Restore, what);
        Ok(())
    }

    pub fn decide(&mut self, step: &'static str, accepted: bool) {
        self.event(step, Action::Decide, if accepted { "accept" } else { "reject" });
    }
}

/// Step labels used by one instantiation of the adjacency sub-protocol.
pub(crate) struct AdjacencyLabels {
    pub build: &'static str,
    pub shift: &'static str,
    pub first: &'static str,
    pub second: &'static str,
}

pub(crate) const HAM_ADJACENCY: AdjacencyLabels = AdjacencyLabels {
    build: "STEP5",
    shift: "STEP6",
    first: "STEP7",
    second: "STEP8",
};

pub(crate) const CELL_ADJACENCY: AdjacencyLabels = AdjacencyLabels {
    build: "CELL_STEP4",
    shift: "CELL_STEP5.6",
    first: "CELL_STEP5.7",
    second: "CELL_STEP5.8",
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Adjacency {
    /// Second column held the smaller number.
    First,
    /// First column held the smaller number.
    Second,
}

/// Exactly two hearts were revealed, in the same row.
fn hearts_share_row(obs: &Observation) -> bool {
    match obs.heart_cells()[..] {
        [(r1, _), (r2, _)] => r1 == r2,
        _ => false,
    }
}

/// Lays `upper` and `lower` out as columns 1 and 2 of a fresh matrix with a
/// face-down index column, and tests whether they encode numbers adjacent
/// modulo their length. Returns the reformed stacks on success, `None` on
/// rejection (the run ends there, cards stay on the table).
pub(crate) fn adjacency_check<R: Rng + ?Sized>(
    table: &mut Table<'_, R>,
    labels: &AdjacencyLabels,
    upper: Stack,
    lower: Stack,
) -> Result<Option<(Adjacency, Stack, Stack)>> {
    let n = upper.len();
    let mut m = CardMatrix::new(n, 2, false, true);
    m.lay_out(1, upper)?;
    m.lay_out(2, lower)?;
    let data = Region::new(m.data_rows(), 1..3);
    table.build(labels.build, &m);

    table.shift(labels.shift, &mut m, 2, Shift::Down);

    table.scramble_rows(labels.first, &mut m)?;
    let seen = table.reveal(labels.first, &mut m, &data);
    let first = hearts_share_row(&seen);
    table.hide_all(labels.first, &mut m);
    table.scramble_rows(labels.first, &mut m)?;
    table.restore(labels.first, &mut m, Axis::Rows)?;
    table.shift(labels.first, &mut m, 2, Shift::Up);

    let how = if first {
        Adjacency::First
    } else {
        table.shift(labels.second, &mut m, 2, Shift::Up);
        table.hide_index(labels.second, &mut m);
        table.scramble_rows(labels.second, &mut m)?;
        let seen = table.reveal(labels.second, &mut m, &data);
        if !hearts_share_row(&seen) {
            return Ok(None);
        }
        table.hide_all(labels.second, &mut m);
        table.scramble_rows(labels.second, &mut m)?;
        table.restore(labels.second, &mut m, Axis::Rows)?;
        table.shift(labels.second, &mut m, 2, Shift::Down);
        Adjacency::Second
    };
    m.turn_all_face_down();
    let upper = m.gather(1);
    let lower = m.gather(2);
    Ok(Some((how, upper, lower)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::card::encode_marker;
    use crate::verdict::Site;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn run(n: usize, a: usize, b: usize, seed: u64) -> Option<Adjacency> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut t = Transcript::new("test", seed);
        let mut table = Table {
            rng: &mut rng,
            t: &mut t,
            scope: Scope::Site(Site::Vertex(0)),
        };
        let upper = encode_marker(n, a).unwrap();
        let lower = encode_marker(n, b).unwrap();
        let out = adjacency_check(&mut table, &HAM_ADJACENCY, upper.clone(), lower.clone()).unwrap();
        out.map(|(how, u, l)| {
            assert_eq!((u, l), (upper, lower), "stacks restored");
            how
        })
    }

    /// Residues live in 1..=n; adjacent means a - b = ±1 mod n.
    fn adjacent(n: usize, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && ((a + n - b) % n == 1 || (b + n - a) % n == 1)
    }

    #[test]
    fn all_pairs_mod_five() {
        for a in 0..=5 {
            for b in 0..=5 {
                let got = run(5, a, b, (a * 6 + b) as u64);
                assert_eq!(got.is_some(), adjacent(5, a, b), "a={a} b={b}");
                if let Some(how) = got {
                    let expected = if (a + 5 - b) % 5 == 1 { Adjacency::First } else { Adjacency::Second };
                    assert_eq!(how, expected, "a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn modulus_two_always_matches_first() {
        assert_eq!(run(2, 1, 2, 0), Some(Adjacency::First));
        assert_eq!(run(2, 2, 1, 0), Some(Adjacency::First));
        assert_eq!(run(2, 1, 1, 0), None);
    }

    #[test]
    fn gap_pair_rejected() {
        for seed in 0..20 {
            assert_eq!(run(5, 2, 4, seed), None);
            assert_eq!(run(5, 4, 2, seed), None);
        }
    }
}
