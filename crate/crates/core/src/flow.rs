//! Flow Free protocol on a rectangular board. Cells are sites, walls are
//! edges; the checks themselves live in the shared path-cover engine.

use rand::Rng;

use crate::cover::{self, CoverDeployment, CoverProblem};
use crate::error::{Error, Result};
use crate::instances::{FlowBoard, FlowWitness, WitnessCheck};
use crate::transcript::Transcript;
use crate::verdict::Verdict;

pub type FlowDeployment = CoverDeployment;

/// Honest prover: colour `j` on path `j`'s walls, numbers `1..=mn-k`
/// consecutive along the paths in random order and direction.
pub fn deploy_flow<R: Rng + ?Sized>(b: &FlowBoard, w: &FlowWitness, rng: &mut R) -> Result<FlowDeployment> {
    if !b.validate_witness(w) {
        return Err(Error::InvalidWitness("paths do not solve the board".into()));
    }
    cover::deploy_paths(&CoverProblem::from_board(b), &w.paths, rng)
}

/// Checks every terminal cell in row-major order, then every other cell,
/// then the global check.
pub fn run_flow_protocol(b: &FlowBoard, d: &FlowDeployment, seed: u64) -> Result<(Verdict, Transcript)> {
    cover::run_cover_protocol(&CoverProblem::from_board(b), d, seed)
}

/// Cards needed to run the protocol on a board.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CardCount {
    pub walls: usize,
    /// Type I plus type II cards over all walls.
    pub marking: usize,
    /// Largest number of index cards any single check lays out at once.
    pub index_cards: usize,
}

pub fn card_count(b: &FlowBoard) -> CardCount {
    let walls = b.wall_count();
    let mn = b.cell_count();
    let k = b.k();
    let g = b.graph();
    let index_cards = (0..mn)
        .map(|v| {
            let r = g.degree(v);
            match b.terminal_pair(v) {
                Some(_) => r,
                // Row and column indices of the cell matrix plus the index
                // column of the adjacency matrix.
                None => r + (k + 1) + (mn - k),
            }
        })
        .max()
        .unwrap_or(0);
    CardCount {
        walls,
        marking: walls * mn,
        index_cards,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::inject_cover;
    use crate::instances::{flow_oracle, parse_board};
    use crate::verdict::Step;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn one_by_three_is_forced_up_to_direction() {
        let b = parse_board("A.A\n").unwrap();
        let w = &flow_oracle(&b).unwrap()[0];
        let mut seen = std::collections::BTreeSet::new();
        for s in 0..50 {
            seen.insert(deploy_flow(&b, w, &mut rng(s)).unwrap().decode().unwrap());
        }
        let expected: std::collections::BTreeSet<_> =
            [vec![(1, 1), (1, 2)], vec![(1, 2), (1, 1)]].into_iter().collect();
        assert_eq!(seen, expected);
    }

    #[test]
    fn two_by_two_uses_vertical_walls() {
        let b = parse_board("AB\nAB\n").unwrap();
        let w = &flow_oracle(&b).unwrap()[0];
        let raw = deploy_flow(&b, w, &mut rng(3)).unwrap().decode().unwrap();
        // walls: 0-1, 0-2, 1-3, 2-3
        assert_eq!(raw[0], (0, 0));
        assert_eq!(raw[3], (0, 0));
        assert_eq!((raw[1].0, raw[2].0), (1, 2));
        let mut numbers = vec![raw[1].1, raw[2].1];
        numbers.sort_unstable();
        assert_eq!(numbers, vec![1, 2]);
    }

    #[test]
    fn three_by_three_numbers_seven_walls() {
        let b = parse_board("A.A\nB..\n..B\n").unwrap();
        for w in flow_oracle(&b).unwrap() {
            let raw = deploy_flow(&b, &w, &mut rng(0)).unwrap().decode().unwrap();
            assert_eq!(raw.len(), 12);
            let mut numbers: Vec<usize> = raw.iter().map(|r| r.1).filter(|&x| x > 0).collect();
            numbers.sort_unstable();
            assert_eq!(numbers, (1..=7).collect::<Vec<_>>());
        }
    }

    #[test]
    fn invalid_witness_refused() {
        let b = parse_board("A.A\n").unwrap();
        let w = FlowWitness { paths: vec![vec![0, 2]] };
        assert!(matches!(deploy_flow(&b, &w, &mut rng(0)), Err(Error::InvalidWitness(_))));
    }

    #[test]
    fn honest_runs_accept() {
        for text in ["A.A\n", "AB\nAB\n", "A.A\nB..\n..B\n"] {
            let b = parse_board(text).unwrap();
            for w in flow_oracle(&b).unwrap() {
                for seed in 0..10 {
                    let d = deploy_flow(&b, &w, &mut rng(seed)).unwrap();
                    let (v, _) = run_flow_protocol(&b, &d, seed).unwrap();
                    assert_eq!(v, Verdict::accept_all(), "{text}");
                }
            }
        }
    }

    #[test]
    fn missing_top_number_rejected_globally() {
        let b = parse_board("AB\nAB\n").unwrap();
        let p = CoverProblem::from_board(&b);
        let d = inject_cover(&p, &[(0, 0), (1, 1), (2, 1), (0, 0)]).unwrap();
        let (v, _) = run_flow_protocol(&b, &d, 0).unwrap();
        assert_eq!(v, Verdict::reject(Step::Global, None));
    }

    #[test]
    fn all_terminal_board_goes_straight_to_global() {
        let b = parse_board("AB\nAB\n").unwrap();
        let w = &flow_oracle(&b).unwrap()[0];
        let d = deploy_flow(&b, w, &mut rng(0)).unwrap();
        let (_, t) = run_flow_protocol(&b, &d, 0).unwrap();
        assert!(t.public_events().iter().all(|e| !e.step.starts_with("CELL")));
    }

    #[test]
    fn card_count_examples() {
        let c = card_count(&parse_board("A.B\n...\nA.B\n").unwrap());
        assert_eq!((c.walls, c.marking), (12, 108));
        // centre cell: 4 walls, 3 colour-matrix indices, 7 adjacency rows
        assert_eq!(c.index_cards, 4 + 3 + 7);
        let c = card_count(&parse_board("A.A\n").unwrap());
        assert_eq!((c.walls, c.marking), (2, 6));
    }
}
