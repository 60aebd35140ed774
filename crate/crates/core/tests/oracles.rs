use std::collections::BTreeSet;

use cardzk::instances::{dpc_oracle, dpc_oracle_with_limit, flow_oracle, DpcInstance, DpcWitness, Graph};
use cardzk::fixtures;

/// Every Hamiltonian `s`-`t` path, found by plain backtracking.
fn ham_paths(g: &Graph, s: usize, t: usize) -> BTreeSet<Vec<usize>> {
    fn extend(g: &Graph, t: usize, path: &mut Vec<usize>, used: &mut [bool], out: &mut BTreeSet<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() == g.n() {
            if last == t {
                out.insert(path.clone());
            }
            return;
        }
        for v in 0..g.n() {
            if !used[v] && g.edge_between(last, v).is_some() {
                used[v] = true;
                path.push(v);
                extend(g, t, path, used, out);
                path.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; g.n()];
    used[s] = true;
    let mut out = BTreeSet::new();
    extend(g, t, &mut vec![s], &mut used, &mut out);
    out
}

#[test]
fn single_path_cover_is_hamiltonian_path() {
    let mut checked = 0;
    for n in 2..=5 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(n, edges).unwrap();
            for s in 0..n {
                for t in 0..n {
                    if s == t {
                        continue;
                    }
                    let inst = DpcInstance::new(g.clone(), vec![s], vec![t], true).unwrap();
                    let got: BTreeSet<Vec<usize>> =
                        dpc_oracle(&inst).unwrap().into_iter().map(|w| w.paths[0].clone()).collect();
                    assert_eq!(got, ham_paths(&g, s, t), "n={n} mask={mask:b} {s}->{t}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 20_000);
}

#[test]
fn flow_and_dpc_oracles_agree_on_fixture_boards() {
    for (name, b) in fixtures::boards() {
        let flow: BTreeSet<Vec<Vec<usize>>> = flow_oracle(&b).unwrap().into_iter().map(|w| w.paths).collect();
        let dpc: BTreeSet<Vec<Vec<usize>>> =
            dpc_oracle_with_limit(&b.to_dpc(), 16).unwrap().into_iter().map(|w: DpcWitness| w.paths).collect();
        assert_eq!(flow, dpc, "{name}");
    }
}

#[test]
fn unpaired_relaxes_paired() {
    for (name, inst) in fixtures::dpc_instances() {
        let loose = DpcInstance { paired: false, ..inst.clone() };
        let strict = DpcInstance { paired: true, ..inst };
        let a: BTreeSet<_> = dpc_oracle(&strict).unwrap().into_iter().collect();
        let b: BTreeSet<_> = dpc_oracle(&loose).unwrap().into_iter().collect();
        assert!(a.is_subset(&b), "{name}");
    }
}
