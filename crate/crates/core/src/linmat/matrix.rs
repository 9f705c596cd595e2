use alloc::vec;
use alloc::vec::Vec;

use crate::incidence::{Graph, Hypergraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

/// An entry `0` or `±X_var`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    Zero,
    Var { index: usize, negative: bool },
}

impl Entry {
    pub fn var(index: usize) -> Self {
        Entry::Var { index, negative: false }
    }

    fn signed(index: usize, sign: Sign) -> Self {
        Entry::Var { index, negative: sign == Sign::Minus }
    }

    pub fn is_zero(self) -> bool {
        self == Entry::Zero
    }
}

/// Matrix whose entries are zero or a signed variable from `X_0..X_{vars-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearFormMatrix {
    rows: usize,
    cols: usize,
    vars: usize,
    entries: Vec<Entry>,
}

impl LinearFormMatrix {
    pub fn zero(rows: usize, cols: usize, vars: usize) -> Self {
        LinearFormMatrix { rows, cols, vars, entries: vec![Entry::Zero; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    pub fn get(&self, r: usize, c: usize) -> Entry {
        self.entries[r * self.cols + c]
    }

    /// Panics if `entry` names a variable outside the universe.
    pub fn set(&mut self, r: usize, c: usize, entry: Entry) {
        if let Entry::Var { index, .. } = entry {
            assert!(index < self.vars, "variable {index} out of range");
        }
        self.entries[r * self.cols + c] = entry;
    }

    /// Appends a row of fresh variables `X_vars, ..., X_{vars+cols-1}`.
    pub fn with_generic_row(&self) -> Self {
        let mut out = LinearFormMatrix::zero(self.rows + 1, self.cols, self.vars + self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        for c in 0..self.cols {
            out.set(self.rows, c, Entry::var(self.vars + c));
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = LinearFormMatrix::zero(self.cols, self.rows, self.vars);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Integer matrix at `X = x`.
    pub fn specialize(&self, x: &[i64]) -> Vec<Vec<i64>> {
        assert_eq!(x.len(), self.vars, "one value per variable");
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| match self.get(r, c) {
                        Entry::Zero => 0,
                        Entry::Var { index, negative: false } => x[index],
                        Entry::Var { index, negative: true } => -x[index],
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let neg = |e: Entry| match e {
            Entry::Zero => Entry::Zero,
            Entry::Var { index, negative } => Entry::Var { index, negative: !negative },
        };
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == neg(self.get(j, i))))
    }
}

/// `A_H`: `n × m`, entry `(v, e)` is the variable of the flag `(v, e)`, flags
/// indexed lexicographically.
pub fn build_a_hyper(h: &Hypergraph) -> LinearFormMatrix {
    let flags = h.flags();
    let mut m = LinearFormMatrix::zero(h.vertex_count(), h.hyperedge_count(), flags.len());
    for (i, &(v, e)) in flags.iter().enumerate() {
        m.set(v, e, Entry::var(i));
    }
    m
}

/// `C_H`: `f × m` over vertex variables; row `(v, e)` holds `X_v` in column `e`.
pub fn build_c_hyper(h: &Hypergraph) -> LinearFormMatrix {
    let flags = h.flags();
    let mut m = LinearFormMatrix::zero(flags.len(), h.hyperedge_count(), h.vertex_count());
    for (i, &(v, e)) in flags.iter().enumerate() {
        m.set(i, e, Entry::var(v));
    }
    m
}

/// `A^±_Γ`: `n × n` over edge variables in lexicographic edge order.
pub fn build_a_graph(g: &Graph, sign: Sign) -> LinearFormMatrix {
    let mut m = LinearFormMatrix::zero(g.vertex_count(), g.vertex_count(), g.edge_count());
    for (idx, (i, j)) in g.edges().enumerate() {
        m.set(i, j, Entry::var(idx));
        if i != j {
            m.set(j, i, Entry::signed(idx, sign));
        }
    }
    m
}

/// `C^±_Γ`: `m × n` over vertex variables; edge `{v_i, v_j}` with `i ≤ j` has
/// `X_i` in column `j` and, if `i ≠ j`, `±X_j` in column `i`.
pub fn build_c_graph(g: &Graph, sign: Sign) -> LinearFormMatrix {
    let mut m = LinearFormMatrix::zero(g.edge_count(), g.vertex_count(), g.vertex_count());
    for (idx, (i, j)) in g.edges().enumerate() {
        m.set(idx, j, Entry::var(i));
        if i != j {
            m.set(idx, i, Entry::signed(j, sign));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_hypergraph_pattern() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![0, 1, 2], vec![1, 2, 3], vec![2, 3]]).unwrap();
        let a = build_a_hyper(&h);
        let ones = a.specialize(&vec![1; a.var_count()]);
        let expected: Vec<Vec<i64>> = h.incidence_matrix().iter().map(|r| r.iter().map(|&b| b as i64).collect()).collect();
        assert_eq!(ones, expected);
        assert_eq!(a.get(0, 0), Entry::var(0));
        assert_eq!(a.get(0, 1), Entry::var(1));
        assert_eq!(a.get(1, 0), Entry::var(2));
    }

    #[test]
    fn flagless_and_single() {
        let h = Hypergraph::edgeless(2).with_empty_hyperedge();
        assert_eq!(build_c_hyper(&h).rows(), 0);
        assert!(build_a_hyper(&h).specialize(&[]).iter().flatten().all(|&x| x == 0));
        let one = Hypergraph::edgeless(1).with_covering_hyperedge();
        assert_eq!(build_a_hyper(&one).get(0, 0), Entry::var(0));
        assert_eq!(build_c_hyper(&one).get(0, 0), Entry::var(0));
    }

    #[test]
    fn graph_matrices() {
        let looped = Graph::path(4).reflexive_closure();
        let plus = build_a_graph(&looped, Sign::Plus);
        assert!(plus.is_symmetric());
        assert_eq!(plus.get(0, 0), Entry::var(0));
        assert_eq!(plus.get(0, 1), Entry::var(1));
        assert_eq!(plus.get(1, 1), Entry::var(2));
        let minus = build_a_graph(&Graph::cycle(3), Sign::Minus);
        assert!(minus.is_antisymmetric());

        let k2 = build_c_graph(&Graph::complete(2), Sign::Minus);
        assert_eq!((k2.rows(), k2.cols()), (1, 2));
        assert_eq!(k2.get(0, 0), Entry::Var { index: 1, negative: true });
        assert_eq!(k2.get(0, 1), Entry::var(0));
    }
}
