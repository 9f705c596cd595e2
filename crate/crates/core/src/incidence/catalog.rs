//! Brute-force isomorphism classes of small graphs, used to enumerate test
//! families such as "all graphs on at most four vertices".

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::Graph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut alloc::vec![false; n], &mut out);
    out
}

fn min_relabelling(g: &Graph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = g.relabel(p).edges().collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
}

/// Lexicographically least edge list over all relabellings.
pub fn canonical_form(g: &Graph) -> Vec<(usize, usize)> {
    min_relabelling(g, &permutations(g.vertex_count()))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// optionally allowing loops. Representatives are in canonical form and
/// sorted by edge count, then edge list.
pub fn small_graphs(n: usize, loops: bool) -> Vec<Graph> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| loops || i != j)
        .collect();
    assert!(slots.len() < 32, "catalog only supports small vertex counts");
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for bits in 0u32..(1 << slots.len()) {
        let edges = slots.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::new(n, edges).expect("slots are distinct and in range");
        classes.insert((g.edge_count(), min_relabelling(&g, &perms)));
    }
    classes
        .into_iter()
        .map(|(_, e)| Graph::new(n, e).expect("canonical edges are valid"))
        .collect()
}

/// Whether some four vertices induce a path (loops ignored).
pub fn has_induced_p4(g: &Graph) -> bool {
    let n = g.vertex_count();
    let adj = |a: usize, b: usize| a != b && g.is_adjacent(a, b);
    for a in 0..n {
        for b in 0..n {
            if !adj(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || !adj(b, c) || adj(a, c) {
                    continue;
                }
                for d in 0..n {
                    if d != a && d != b && adj(c, d) && !adj(b, d) && !adj(a, d) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let loopless: Vec<usize> = (1..=5).map(|n| small_graphs(n, false).len()).collect();
        assert_eq!(loopless, [1, 2, 4, 11, 34]);
        let looped: Vec<usize> = (1..=4).map(|n| small_graphs(n, true).len()).collect();
        assert_eq!(looped, [2, 6, 20, 90]);
    }

    #[test]
    fn p4_detection() {
        assert!(has_induced_p4(&Graph::path(4)));
        assert!(!has_induced_p4(&Graph::cycle(4)));
        assert!(has_induced_p4(&Graph::cycle(5)));
    }

    #[test]
    fn isomorphism_ignores_labels() {
        let a = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::new(3, [(0, 2), (2, 1)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&a, &Graph::cycle(3)));
    }
}
