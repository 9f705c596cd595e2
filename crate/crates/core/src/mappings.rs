//! Partial maps: selectors of hypergraphs and animations of graphs.
//!
//! A selector of `H` sends some hyperedges to incident vertices; an animation
//! of `Γ` sends some vertices to neighbours (it is a selector of `Adj(Γ)`).
//! Enumeration is in lexicographic order of image tables with `⊥` first.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::incidence::{Graph, Hypergraph};

/// A partial map `{0..n} ⇢ {0..codomain}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMap {
    targets: Vec<Option<usize>>,
    codomain: usize,
}

impl PartialMap {
    pub fn new(targets: Vec<Option<usize>>, codomain: usize) -> Option<Self> {
        targets.iter().flatten().all(|&t| t < codomain).then_some(PartialMap { targets, codomain })
    }

    pub fn empty(n: usize, codomain: usize) -> Self {
        PartialMap { targets: vec![None; n], codomain }
    }

    pub fn targets(&self) -> &[Option<usize>] {
        &self.targets
    }

    pub fn get(&self, x: usize) -> Option<usize> {
        self.targets[x]
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.targets.len()).filter(|&x| self.targets[x].is_some()).collect()
    }

    pub fn degree(&self) -> usize {
        self.targets.iter().flatten().count()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    /// `mon φ = ∏_{u ∈ Dom φ} X_{u^φ}`.
    pub fn monomial(&self) -> Monomial {
        let mut exps = vec![0u32; self.codomain];
        for &t in self.targets.iter().flatten() {
            exps[t] += 1;
        }
        Monomial::new(exps)
    }

    /// Orbit structure of a self-map.
    pub fn classify(&self) -> AnimationClass {
        assert_eq!(self.targets.len(), self.codomain, "classification needs a self-map");
        let n = self.targets.len();
        let mut periodic = vec![false; n];
        for u in 0..n {
            let mut x = u;
            for _ in 0..n {
                match self.targets[x] {
                    Some(y) => x = y,
                    None => break,
                }
                if x == u {
                    periodic[u] = true;
                    break;
                }
            }
        }
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for u in 0..n {
            if periodic[u] && !seen[u] {
                let mut orbit = vec![u];
                seen[u] = true;
                let mut x = self.targets[u].expect("periodic points are defined");
                while x != u {
                    seen[x] = true;
                    orbit.push(x);
                    x = self.targets[x].expect("periodic points are defined");
                }
                orbits.push(orbit);
            }
        }
        let depth = (0..n)
            .map(|u| {
                let mut x = u;
                let mut steps = 0;
                while !periodic[x] {
                    match self.targets[x] {
                        Some(y) => {
                            x = y;
                            steps += 1;
                        }
                        None => break,
                    }
                }
                steps
            })
            .collect();
        let periodic_points: Vec<usize> = (0..n).filter(|&u| periodic[u]).collect();
        let nilpotent = periodic_points.is_empty();
        let fixed = orbits.iter().all(|o| o.len() == 1);
        let odd_periodic = orbits.iter().all(|o| o.len() % 2 == 1);
        let odlen = orbits.iter().filter(|o| o.len() > 1 && o.len() % 2 == 1).count();
        AnimationClass { periodic_points, orbits, depth, nilpotent, fixed, odd_periodic, odlen }
    }
}

/// `a->b,c->d` over the domain; `-` for the empty map.
impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .targets
            .iter()
            .enumerate()
            .filter_map(|(x, t)| t.map(|t| alloc::format!("{x}->{t}")))
            .collect();
        if parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnimationClass {
    pub periodic_points: Vec<usize>,
    /// Cycles, each starting at its least vertex.
    pub orbits: Vec<Vec<usize>>,
    /// Steps until a periodic point or an undefined value is reached.
    pub depth: Vec<usize>,
    pub nilpotent: bool,
    pub fixed: bool,
    pub odd_periodic: bool,
    /// Number of orbits of odd length greater than one.
    pub odlen: usize,
}

impl AnimationClass {
    pub fn name(&self) -> &'static str {
        if self.nilpotent {
            "nil"
        } else if self.fixed {
            "fix"
        } else if self.odd_periodic {
            "ods"
        } else {
            "ani"
        }
    }
}

/// Exponent vector over the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }
}

/// `X_1^2*X_3`, or `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { alloc::format!("X_{v}") } else { alloc::format!("X_{v}^{e}") })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnimationFilter {
    Nil,
    Fix,
    Ods,
    All,
}

/// Depth-first enumeration of partial maps with per-source candidate lists,
/// pruned by the degree window and an optional cycle predicate.
struct Search<'a, F> {
    options: &'a [Vec<usize>],
    degree: Option<usize>,
    /// Largest number of sources that can still be defined from position `i` on.
    room: Vec<usize>,
    targets: Vec<Option<usize>>,
    codomain: usize,
    cycle_ok: Option<fn(usize) -> bool>,
    visit: F,
}

impl<F: FnMut(&PartialMap)> Search<'_, F> {
    fn run(&mut self, pos: usize, deg: usize) {
        if let Some(k) = self.degree {
            if deg > k || deg + self.room[pos] < k {
                return;
            }
        }
        if pos == self.options.len() {
            let m = PartialMap { targets: self.targets.clone(), codomain: self.codomain };
            (self.visit)(&m);
            return;
        }
        self.run(pos + 1, deg);
        for i in 0..self.options[pos].len() {
            let t = self.options[pos][i];
            self.targets[pos] = Some(t);
            if self.new_cycle_allowed(pos) {
                self.run(pos + 1, deg + 1);
            }
            self.targets[pos] = None;
        }
    }

    /// A cycle closed by the latest assignment must pass through `pos`.
    fn new_cycle_allowed(&self, pos: usize) -> bool {
        let Some(ok) = self.cycle_ok else { return true };
        let mut x = pos;
        for len in 1..=self.targets.len() {
            match self.targets[x] {
                Some(y) if y == pos => return ok(len),
                Some(y) => x = y,
                None => return true,
            }
        }
        true
    }
}

fn search<F: FnMut(&PartialMap)>(
    options: &[Vec<usize>],
    codomain: usize,
    degree: Option<usize>,
    cycle_ok: Option<fn(usize) -> bool>,
    visit: F,
) {
    let mut room = vec![0; options.len() + 1];
    for i in (0..options.len()).rev() {
        room[i] = room[i + 1] + usize::from(!options[i].is_empty());
    }
    let mut s = Search { options, degree, room, targets: vec![None; options.len()], codomain, cycle_ok, visit };
    s.run(0, 0);
}

/// Calls `visit` on every selector of `h` (of degree `k`, if given).
pub fn for_each_selector<F: FnMut(&PartialMap)>(h: &Hypergraph, k: Option<usize>, visit: F) {
    search(h.supports(), h.vertex_count(), k, None, visit);
}

pub fn enumerate_selectors(h: &Hypergraph, k: Option<usize>) -> Vec<PartialMap> {
    let mut out = Vec::new();
    for_each_selector(h, k, |m| out.push(m.clone()));
    out
}

/// Calls `visit` on every animation of `g` in the class (of degree `k`, if given).
pub fn for_each_animation<F: FnMut(&PartialMap)>(g: &Graph, class: AnimationFilter, k: Option<usize>, visit: F) {
    let options: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.neighbors(v)).collect();
    let cycle_ok: Option<fn(usize) -> bool> = match class {
        AnimationFilter::Nil => Some(|_| false),
        AnimationFilter::Fix => Some(|len| len == 1),
        AnimationFilter::Ods => Some(|len| len % 2 == 1),
        AnimationFilter::All => None,
    };
    search(&options, g.vertex_count(), k, cycle_ok, visit);
}

pub fn enumerate_animations(g: &Graph, class: AnimationFilter, k: Option<usize>) -> Vec<PartialMap> {
    let mut out = Vec::new();
    for_each_animation(g, class, k, |m| out.push(m.clone()));
    out
}

/// `∏_e (|‖e‖| + 1)`.
pub fn selector_count(h: &Hypergraph) -> u128 {
    h.supports().iter().map(|s| s.len() as u128 + 1).product()
}

/// Largest degree of a fixed (sign `-`) or odd-periodic (sign `+`) animation.
pub fn rank_from_animations(g: &Graph, plus: bool) -> usize {
    let class = if plus { AnimationFilter::Ods } else { AnimationFilter::Fix };
    (0..=g.vertex_count())
        .rev()
        .find(|&k| {
            let mut found = false;
            for_each_animation(g, class, Some(k), |_| found = true);
            found
        })
        .unwrap_or(0)
}

/// Largest degree of a selector.
pub fn rank_from_selectors(h: &Hypergraph) -> usize {
    enumerate_selectors(h, None).iter().map(PartialMap::degree).max().unwrap_or(0)
}

/// `#{e : ‖e‖ ≠ ∅}`.
pub fn formula_rank_selectors(h: &Hypergraph) -> usize {
    h.nonempty_hyperedge_count()
}

/// `n - #{components without a loop}` (sign `-`) or
/// `n - #{components without an odd cycle}` (sign `+`).
pub fn formula_rank_graph(g: &Graph, plus: bool) -> usize {
    let bad = g
        .component_info()
        .iter()
        .filter(|c| if plus { !c.has_odd_cycle } else { !c.has_loop })
        .count();
    g.vertex_count() - bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn selector_counts() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let all = enumerate_selectors(&h, None);
        assert_eq!(all.len(), 3);
        assert_eq!(all[0].degree(), 0);
        assert_eq!(all[1].get(0), Some(0));

        let ex = Hypergraph::new(4, vec![vec![0, 1], vec![0, 1, 2], vec![1, 2, 3], vec![2, 3]]).unwrap();
        assert_eq!(enumerate_selectors(&ex, None).len(), 144);
        assert_eq!(selector_count(&ex), 144);
        assert_eq!(rank_from_selectors(&ex), 4);
    }

    #[test]
    fn animation_counts() {
        let c3 = Graph::cycle(3);
        assert_eq!(enumerate_animations(&c3, AnimationFilter::All, None).len(), 27);
        let k2 = Graph::complete(2);
        let nil1 = enumerate_animations(&k2, AnimationFilter::Nil, Some(1));
        assert_eq!(nil1.len(), 2);
        assert!(enumerate_animations(&k2, AnimationFilter::Nil, Some(2)).is_empty());
        let rot = PartialMap::new(vec![Some(1), Some(2), Some(0)], 3).unwrap();
        let c = rot.classify();
        assert!(c.odd_periodic && !c.fixed && !c.nilpotent);
        assert_eq!(c.odlen, 1);
        assert!(enumerate_animations(&c3, AnimationFilter::Ods, Some(3)).contains(&rot));
    }

    #[test]
    fn classification_cases() {
        let e = PartialMap::empty(3, 3).classify();
        assert!(e.nilpotent && e.fixed && e.odd_periodic);
        assert_eq!(e.odlen, 0);

        let id = PartialMap::new(vec![Some(0), Some(1), Some(2)], 3).unwrap().classify();
        assert!(id.fixed && !id.nilpotent && id.odd_periodic);
        assert_eq!(id.odlen, 0);

        let five = PartialMap::new((0..5).map(|i| Some((i + 1) % 5)).collect(), 5).unwrap().classify();
        assert!(five.odd_periodic && !five.fixed);
        assert_eq!(five.odlen, 1);
        let four = PartialMap::new((0..4).map(|i| Some((i + 1) % 4)).collect(), 4).unwrap().classify();
        assert!(!four.odd_periodic && !four.fixed && !four.nilpotent);
    }

    #[test]
    fn monomials() {
        let m = PartialMap::new(vec![Some(1), None, Some(1)], 3).unwrap();
        assert_eq!(m.monomial().to_string(), "X_1^2");
        // Predecessor map of the path 0 - 1 - 2 rooted at 2.
        let pred = PartialMap::new(vec![Some(1), Some(2), None], 3).unwrap();
        assert_eq!(pred.monomial().to_string(), "X_1*X_2");
        assert_eq!(PartialMap::empty(2, 2).monomial().to_string(), "1");
    }

    #[test]
    fn rank_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(rank_from_animations(&c4, true), 3);
        assert_eq!(formula_rank_graph(&c4, true), 3);
        let p4 = Graph::path(4);
        assert_eq!(rank_from_animations(&p4, false), 3);
        let r = Graph::path(3).reflexive_closure();
        assert_eq!(rank_from_animations(&r, false), 3);
        assert_eq!(rank_from_animations(&r, true), 3);
    }
}
