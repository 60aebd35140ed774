//! Hamiltonian-cycle protocol: deployment of cycle marks and edge numbers,
//! the per-vertex check, and the global uniqueness check.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::card::{decode_marker, encode_marker, Axis, CardMatrix, Region, Stack};
use crate::engine::{adjacency_check, Adjacency, Table, HAM_ADJACENCY};
use crate::error::{parse_err, violation, Error, Result};
use crate::instances::{Graph, HamWitness, WitnessCheck};
use crate::transcript::{PrivateKind, Scope, Transcript};
use crate::verdict::{Site, Step, Verdict};

/// Face-down marker stacks on every edge, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamDeployment {
    /// One card per edge: heart for cycle edges.
    pub cycle_marks: Vec<Stack>,
    /// `E_n(number)` per edge.
    pub number_marks: Vec<Stack>,
}

impl HamDeployment {
    /// Checks what the verifier can check without looking: stack sizes,
    /// marking cards only, all face down.
    pub fn check_shape(&self, g: &Graph) -> Result<()> {
        if self.cycle_marks.len() != g.edge_count() || self.number_marks.len() != g.edge_count() {
            return Err(violation("deployment does not cover every edge exactly once"));
        }
        for (e, (c, num)) in self.cycle_marks.iter().zip(&self.number_marks).enumerate() {
            if c.len() != 1 || num.len() != g.n() {
                return Err(violation(format!("edge {} carries stacks of the wrong size", e + 1)));
            }
            if !(c.is_marker() && num.is_marker() && c.is_face_down() && num.is_face_down()) {
                return Err(violation(format!("edge {} stacks are not face-down markers", e + 1)));
            }
        }
        Ok(())
    }

    /// One line per edge: `u v <cycle card> <number stack>`, 1-based.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let _ = writeln!(out, "{} {} {} {}", u + 1, v + 1, self.cycle_marks[e], self.number_marks[e]);
        }
        out
    }

    pub fn from_text(g: &Graph, text: &str) -> Result<Self> {
        let (cycle_marks, number_marks) = parse_edge_stacks(g, text)?;
        let d = HamDeployment {
            cycle_marks,
            number_marks,
        };
        d.check_shape(g)?;
        Ok(d)
    }
}

/// Parses `u v <stack> <stack>` lines keyed by edge, in any order.
pub(crate) fn parse_edge_stacks(g: &Graph, text: &str) -> Result<(Vec<Stack>, Vec<Stack>)> {
    let mut first = vec![None; g.edge_count()];
    let mut second = vec![None; g.edge_count()];
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [u, v, a, b] = toks[..] else {
            return Err(parse_err(i + 1, "expected `u v <stack> <stack>`"));
        };
        let vertex = |t: &str| -> Result<usize> {
            match t.parse::<usize>() {
                Ok(x) if (1..=g.n()).contains(&x) => Ok(x - 1),
                _ => Err(parse_err(i + 1, format!("bad vertex {t:?}"))),
            }
        };
        let e = g
            .edge_between(vertex(u)?, vertex(v)?)
            .ok_or_else(|| parse_err(i + 1, format!("no edge {u} {v}")))?;
        let stack = |t: &str| Stack::from_glyphs(t).ok_or_else(|| parse_err(i + 1, format!("bad stack {t:?}")));
        if first[e].replace(stack(a)?).is_some() {
            return Err(parse_err(i + 1, format!("edge {u} {v} listed twice")));
        }
        second[e] = Some(stack(b)?);
    }
    let all = |v: Vec<Option<Stack>>| {
        v.into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| violation("deployment does not cover every edge"))
    };
    Ok((all(first)?, all(second)?))
}

/// Honest prover: hearts on cycle edges, numbers `1..=n` consecutively
/// around the cycle from a random edge in a random direction.
pub fn deploy_ham<R: Rng + ?Sized>(g: &Graph, w: &HamWitness, rng: &mut R) -> Result<HamDeployment> {
    if !g.validate_witness(w) {
        return Err(Error::InvalidWitness("not a Hamiltonian cycle of the graph".into()));
    }
    let n = g.n();
    let cycle: Vec<usize> = (0..n)
        .map(|i| {
            g.edge_between(w.order[i], w.order[(i + 1) % n])
                .expect("validated witness")
        })
        .collect();
    let start = rng.gen_range(0..n);
    let forward: bool = rng.gen();
    let mut raw = vec![(false, 0); g.edge_count()];
    for t in 0..n {
        let pos = if forward { (start + t) % n } else { (start + n - t) % n };
        raw[cycle[pos]] = (true, t + 1);
    }
    inject_deployment(g, &raw)
}

/// Arbitrary (possibly dishonest) deployment from per-edge
/// `(cycle bit, number)` pairs.
pub fn inject_deployment(g: &Graph, raw: &[(bool, usize)]) -> Result<HamDeployment> {
    if raw.len() != g.edge_count() {
        return Err(violation("one (cycle bit, number) pair per edge required"));
    }
    let mut cycle_marks = Vec::with_capacity(raw.len());
    let mut number_marks = Vec::with_capacity(raw.len());
    for &(bit, number) in raw {
        cycle_marks.push(encode_marker(1, usize::from(bit))?);
        number_marks.push(encode_marker(g.n(), number)?);
    }
    Ok(HamDeployment {
        cycle_marks,
        number_marks,
    })
}

/// Decodes a deployment back into `(cycle bit, number)` pairs.
pub fn decode_deployment(d: &HamDeployment) -> Result<Vec<(bool, usize)>> {
    d.cycle_marks
        .iter()
        .zip(&d.number_marks)
        .map(|(c, n)| Ok((decode_marker(c)? == 1, decode_marker(n)?)))
        .collect()
}

/// Public check of one vertex. On acceptance the deployment is left exactly
/// as it was; on rejection it is untouched and the run is over.
pub fn check_vertex<R: Rng + ?Sized>(
    g: &Graph,
    d: &mut HamDeployment,
    v: usize,
    rng: &mut R,
    t: &mut Transcript,
) -> Result<Verdict> {
    let site = Some(Site::Vertex(v));
    let mut table = Table {
        rng,
        t,
        scope: Scope::Site(Site::Vertex(v)),
    };
    let edges: Vec<usize> = g.incident(v).iter().map(|&(_, e)| e).collect();
    let degree = edges.len();

    let mut m = CardMatrix::new(degree, 2, false, true);
    for (row, &e) in edges.iter().enumerate() {
        m.place(row, 1, d.cycle_marks[e].clone());
        m.place(row, 2, d.number_marks[e].clone());
    }
    table.build("STEP3", &m);

    table.scramble_rows("STEP4", &mut m)?;
    let seen = table.reveal("STEP4", &mut m, &Region::new(0..degree, 1..2));
    let rows: Vec<usize> = seen.heart_cells().into_iter().map(|(r, _)| r).collect();
    let [i, j] = rows[..] else {
        table.decide("STEP4", false);
        return Ok(Verdict::reject(Step::Step4, site));
    };

    let upper = m.take(i, 2);
    let lower = m.take(j, 2);
    let Some((how, upper, lower)) = adjacency_check(&mut table, &HAM_ADJACENCY, upper, lower)? else {
        table.decide("STEP8", false);
        return Ok(Verdict::reject(Step::Step8, site));
    };
    m.place(i, 2, upper);
    m.place(j, 2, lower);

    table.event("STEP9", crate::transcript::Action::Restack, "col 2");
    table.hide_all("STEP9", &mut m);
    table.scramble_rows("STEP9", &mut m)?;
    table.restore("STEP9", &mut m, Axis::Rows)?;
    for (row, &e) in edges.iter().enumerate() {
        d.cycle_marks[e] = m.take(row, 1);
        d.number_marks[e] = m.take(row, 2);
    }
    table.event("STEP9", crate::transcript::Action::Redeploy, format!("{degree} edges"));

    let step = match how {
        Adjacency::First => Step::Step7,
        Adjacency::Second => Step::Step8,
    };
    table.decide(step.label(), true);
    Ok(Verdict::accept(step, site))
}

/// Gathers every number stack into one scrambled column and reveals it.
/// Accepts iff each of `1..=n` appears exactly once and every stack is a
/// well-formed marker.
pub fn global_check<R: Rng + ?Sized>(
    g: &Graph,
    d: &HamDeployment,
    rng: &mut R,
    t: &mut Transcript,
) -> Result<Verdict> {
    let mut table = Table {
        rng,
        t,
        scope: Scope::Global,
    };
    let e = g.edge_count();
    let mut m = CardMatrix::new(e, 1, false, false);
    for (row, s) in d.number_marks.iter().enumerate() {
        m.place(row, 0, s.clone());
    }
    table.build("STEP11", &m);
    table.scramble_rows("STEP11", &mut m)?;
    table.reveal("STEP11", &mut m, &Region::new(0..e, 0..1));
    let mut counts = vec![0usize; g.n() + 1];
    let mut well_formed = true;
    for row in 0..e {
        match decode_marker(m.cell(row, 0)) {
            Ok(x) => counts[x] += 1,
            Err(_) => well_formed = false,
        }
    }
    let accepted = well_formed && counts[1..].iter().all(|&c| c == 1);
    table.decide("STEP11", accepted);
    Ok(if accepted {
        Verdict::accept(Step::Step11, None)
    } else {
        Verdict::reject(Step::Step11, None)
    })
}

/// Full run: every vertex in ascending order, then the global check. Stops
/// at the first rejection.
pub fn run_ham_protocol(g: &Graph, d: &HamDeployment, seed: u64) -> Result<(Verdict, Transcript)> {
    d.check_shape(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Transcript::new("ham", seed);
    t.push_private(Scope::Global, "STEP2", PrivateKind::Layout(d.to_text(g)));
    let mut working = d.clone();
    for v in 0..g.n() {
        let verdict = check_vertex(g, &mut working, v, &mut rng, &mut t)?;
        if !verdict.accepted {
            t.set_verdict(verdict);
            return Ok((verdict, t));
        }
    }
    let verdict = global_check(g, &working, &mut rng, &mut t)?;
    let verdict = if verdict.accepted { Verdict::accept_all() } else { verdict };
    t.set_verdict(verdict);
    Ok((verdict, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::ham_oracle;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn k3_cycle() -> HamWitness {
        HamWitness { order: vec![0, 1, 2] }
    }

    #[test]
    fn k3_deployment_is_forced() {
        let g = Graph::complete(3);
        let d = deploy_ham(&g, &k3_cycle(), &mut rng(1)).unwrap();
        let raw = decode_deployment(&d).unwrap();
        assert!(raw.iter().all(|&(bit, _)| bit));
        let mut numbers: Vec<usize> = raw.iter().map(|&(_, x)| x).collect();
        numbers.sort_unstable();
        assert_eq!(numbers, vec![1, 2, 3]);
    }

    #[test]
    fn k4_deployment_marks_four_edges() {
        let g = Graph::complete(4);
        let w = HamWitness { order: vec![0, 1, 2, 3] };
        let d = deploy_ham(&g, &w, &mut rng(5)).unwrap();
        let raw = decode_deployment(&d).unwrap();
        assert_eq!(raw.iter().filter(|r| r.0).count(), 4);
        assert_eq!(raw.iter().filter(|r| **r == (false, 0)).count(), 2);
        let mut numbers: Vec<usize> = raw.iter().filter(|r| r.0).map(|r| r.1).collect();
        numbers.sort_unstable();
        assert_eq!(numbers, vec![1, 2, 3, 4]);
    }

    #[test]
    fn seeds_cover_all_rotations_and_reflections() {
        // Expected set: the 2n cyclic numberings of the cycle edges.
        let g = Graph::complete(4);
        let w = HamWitness { order: vec![0, 1, 2, 3] };
        let cycle: Vec<usize> = (0..4).map(|i| g.edge_between(w.order[i], w.order[(i + 1) % 4]).unwrap()).collect();
        let mut expected = std::collections::BTreeSet::new();
        for start in 0..4 {
            for forward in [true, false] {
                let mut raw = vec![(false, 0); 6];
                for t in 0..4 {
                    let pos = if forward { (start + t) % 4 } else { (start + 4 - t) % 4 };
                    raw[cycle[pos]] = (true, t + 1);
                }
                expected.insert(raw);
            }
        }
        assert_eq!(expected.len(), 8);
        let seen: std::collections::BTreeSet<_> = (0..200)
            .map(|s| decode_deployment(&deploy_ham(&g, &w, &mut rng(s)).unwrap()).unwrap())
            .collect();
        assert_eq!(seen, expected);
    }

    #[test]
    fn deploy_refuses_non_witness() {
        let g = Graph::cycle(4);
        let w = HamWitness { order: vec![0, 2, 1, 3] };
        assert!(matches!(deploy_ham(&g, &w, &mut rng(0)), Err(Error::InvalidWitness(_))));
    }

    #[test]
    fn inject_rejects_out_of_range_numbers() {
        let g = Graph::complete(3);
        assert!(matches!(
            inject_deployment(&g, &[(true, 4), (true, 1), (true, 2)]),
            Err(Error::InvalidEncoding { .. })
        ));
        let all_spades = inject_deployment(&g, &[(false, 0); 3]).unwrap();
        assert!(all_spades.check_shape(&g).is_ok());
    }

    #[test]
    fn honest_k3_vertices_accept_and_restore() {
        let g = Graph::complete(3);
        let d0 = deploy_ham(&g, &k3_cycle(), &mut rng(2)).unwrap();
        let mut d = d0.clone();
        let mut r = rng(9);
        let mut t = Transcript::new("ham", 9);
        for v in 0..3 {
            let verdict = check_vertex(&g, &mut d, v, &mut r, &mut t).unwrap();
            assert!(verdict.accepted);
            assert_eq!(d, d0);
        }
    }

    #[test]
    fn three_hearts_rejected_at_step4() {
        let g = Graph::complete(4);
        let d = inject_deployment(&g, &[(true, 1), (true, 2), (true, 3), (false, 0), (false, 0), (false, 0)]).unwrap();
        // vertex 0 touches edges 0,1,2
        let mut r = rng(0);
        let mut t = Transcript::new("ham", 0);
        let v = check_vertex(&g, &mut d.clone(), 0, &mut r, &mut t).unwrap();
        assert_eq!(v, Verdict::reject(Step::Step4, Some(Site::Vertex(0))));
    }

    #[test]
    fn gap_rejected_at_step8() {
        // C5 numbered 1,2,4,5,3 around the cycle; vertex 2 joins edges 2 and 4.
        let g = Graph::cycle(5);
        let d = inject_deployment(&g, &[(true, 1), (true, 2), (true, 4), (true, 5), (true, 3)]).unwrap();
        for seed in 0..20 {
            let mut t = Transcript::new("ham", seed);
            let v = check_vertex(&g, &mut d.clone(), 2, &mut rng(seed), &mut t).unwrap();
            assert_eq!(v, Verdict::reject(Step::Step8, Some(Site::Vertex(2))));
        }
    }

    #[test]
    fn adjacency_rule_for_all_pairs_mod_five() {
        // Vertex 0 of C5 sees edges 0 (0-1) and 4 (4-0).
        let g = Graph::cycle(5);
        for a in 1..=5 {
            for b in 1..=5 {
                let mut raw = vec![(true, 0); 5];
                raw[0].1 = a;
                raw[4].1 = b;
                let d = inject_deployment(&g, &raw).unwrap();
                let mut t = Transcript::new("ham", 0);
                let v = check_vertex(&g, &mut d.clone(), 0, &mut rng((a * 7 + b) as u64), &mut t).unwrap();
                let adjacent = (a + 5 - b) % 5 == 1 || (b + 5 - a) % 5 == 1;
                assert_eq!(v.accepted, adjacent, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn global_check_examples() {
        let g = Graph::complete(4);
        let honest = deploy_ham(&g, &HamWitness { order: vec![0, 1, 2, 3] }, &mut rng(0)).unwrap();
        let mut t = Transcript::new("ham", 0);
        assert!(global_check(&g, &honest, &mut rng(0), &mut t).unwrap().accepted);
        let mut raw = decode_deployment(&honest).unwrap();
        let spare = raw.iter().position(|r| !r.0).unwrap();
        raw[spare].1 = 4;
        let bad = inject_deployment(&g, &raw).unwrap();
        assert!(!global_check(&g, &bad, &mut rng(0), &mut t).unwrap().accepted);
    }

    #[test]
    fn run_accepts_honest_k3() {
        let g = Graph::complete(3);
        let d = deploy_ham(&g, &k3_cycle(), &mut rng(3)).unwrap();
        let (v, t) = run_ham_protocol(&g, &d, 3).unwrap();
        assert_eq!(v, Verdict::accept_all());
        assert_eq!(t.verdict(), Some(v));
    }

    #[test]
    fn missing_cycle_heart_rejected_at_step4_on_endpoint() {
        let g = Graph::complete(4);
        let w = &ham_oracle(&g).unwrap()[0];
        let d = deploy_ham(&g, w, &mut rng(4)).unwrap();
        let mut raw = decode_deployment(&d).unwrap();
        let e = raw.iter().position(|r| r.0).unwrap();
        raw[e].0 = false;
        let d = inject_deployment(&g, &raw).unwrap();
        let (v, _) = run_ham_protocol(&g, &d, 4).unwrap();
        assert_eq!(v.step, Step::Step4);
        let (a, b) = g.edges()[e];
        let first = a.min(b);
        assert_eq!(v.site, Some(Site::Vertex(first)));
    }

    #[test]
    fn deployment_text_roundtrip() {
        let g = Graph::complete(4);
        let d = deploy_ham(&g, &HamWitness { order: vec![0, 2, 1, 3] }, &mut rng(8)).unwrap();
        assert_eq!(HamDeployment::from_text(&g, &d.to_text(&g)).unwrap(), d);
        assert!(HamDeployment::from_text(&g, "1 2 H SHSS\n").is_err());
    }

    #[test]
    fn shape_violation_is_an_error_not_a_reject() {
        let g = Graph::complete(3);
        let mut d = deploy_ham(&g, &k3_cycle(), &mut rng(0)).unwrap();
        d.number_marks[0] = encode_marker(2, 1).unwrap();
        assert!(matches!(run_ham_protocol(&g, &d, 0), Err(Error::ProtocolViolation(_))));
    }
}
