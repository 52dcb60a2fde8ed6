//! Decorated plane rooted trivalent trees, their admissible-cut coproduct, the
//! map from words to tree sums, vertex functions and `Ω_m`.

use std::fmt;

use num_traits::One;

use crate::coeff::{Generator, LinComb, Monomial, TensorK};
use crate::dec::{Dec, Q};
use crate::iterint::weight1_class;
use crate::word::IterWord;

/// The part of a tree below the root leg: a full binary tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn leaves(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn internal(&self) -> usize {
        self.leaves() - 1
    }

    /// All shapes with `n` leaves, in a fixed order.
    pub fn all(n: usize) -> Vec<Shape> {
        let mut table: Vec<Vec<Shape>> = vec![Vec::new(), vec![Shape::Leaf]];
        for k in 2..=n {
            let mut v = Vec::new();
            for a in 1..k {
                for l in &table[a] {
                    for r in &table[k - a] {
                        v.push(Shape::Node(Box::new(l.clone()), Box::new(r.clone())));
                    }
                }
            }
            table.push(v);
        }
        if n == 0 {
            Vec::new()
        } else {
            table.swap_remove(n)
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Leaf => write!(f, "."),
            Shape::Node(l, r) => write!(f, "({}{})", l, r),
        }
    }
}

/// An internal vertex, described by the leaves `i..=j` below it and the split point `s`:
/// its left child covers `i..=s`. Leaves are numbered from 1; arc `k` lies between leaves
/// `k` and `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub i: usize,
    pub s: usize,
    pub j: usize,
    pub parent: Option<usize>,
}

impl Vertex {
    pub fn is_below(&self, other: &Vertex) -> bool {
        other.i <= self.i && self.j <= other.j && (self.i, self.j) != (other.i, other.j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneTree {
    pub shape: Shape,
    pub arcs: Vec<Dec>,
}

impl PlaneTree {
    pub fn new(shape: Shape, arcs: Vec<Dec>) -> PlaneTree {
        assert_eq!(arcs.len(), shape.leaves() + 1, "a tree with n legs has n + 1 arcs");
        PlaneTree { shape, arcs }
    }

    pub fn vertex_count(&self) -> usize {
        self.shape.internal()
    }

    /// Internal vertices in pre-order; index 0 is the root.
    pub fn vertices(&self) -> Vec<Vertex> {
        fn walk(sh: &Shape, start: usize, parent: Option<usize>, out: &mut Vec<Vertex>) {
            if let Shape::Node(l, r) = sh {
                let nl = l.leaves();
                let v = Vertex { i: start, s: start + nl - 1, j: start + sh.leaves() - 1, parent };
                let id = out.len();
                out.push(v);
                walk(l, start, Some(id), out);
                walk(r, start + nl, Some(id), out);
            }
        }
        let mut out = Vec::new();
        walk(&self.shape, 1, None, &mut out);
        out
    }

    /// The weight-one word whose class is `f^T_v`: its three letters are the arcs of the
    /// domains left of, between and right of the two children.
    pub fn vertex_word(&self, v: &Vertex) -> IterWord {
        IterWord::new(self.arcs[v.i - 1].clone(), vec![self.arcs[v.s].clone()], self.arcs[v.j].clone())
    }

    /// The subtree above the edge entering `v`.
    pub fn subtree(&self, v: &Vertex) -> PlaneTree {
        fn find(sh: &Shape, start: usize, i: usize, j: usize) -> Option<Shape> {
            let n = sh.leaves();
            if start == i && start + n - 1 == j {
                return Some(sh.clone());
            }
            match sh {
                Shape::Leaf => None,
                Shape::Node(l, r) => find(l, start, i, j).or_else(|| find(r, start + l.leaves(), i, j)),
            }
        }
        let sh = find(&self.shape, 1, v.i, v.j).expect("vertex belongs to the tree");
        PlaneTree::new(sh, self.arcs[v.i - 1..=v.j].to_vec())
    }

    /// Contracts the subtrees at the given (pairwise incomparable) vertices to legs.
    pub fn quotient(&self, cut: &[Vertex]) -> PlaneTree {
        fn rebuild(sh: &Shape, start: usize, cut: &[Vertex]) -> Shape {
            let n = sh.leaves();
            if cut.iter().any(|v| v.i == start && v.j == start + n - 1) {
                return Shape::Leaf;
            }
            match sh {
                Shape::Leaf => Shape::Leaf,
                Shape::Node(l, r) => Shape::Node(
                    Box::new(rebuild(l, start, cut)),
                    Box::new(rebuild(r, start + l.leaves(), cut)),
                ),
            }
        }
        let shape = rebuild(&self.shape, 1, cut);
        let arcs = self
            .arcs
            .iter()
            .enumerate()
            .filter(|(k, _)| !cut.iter().any(|v| v.i <= *k && *k < v.j))
            .map(|(_, a)| a.clone())
            .collect();
        PlaneTree::new(shape, arcs)
    }

    pub fn latex(&self) -> String {
        let a: Vec<String> = self.arcs.iter().map(|d| d.latex()).collect();
        format!("T_{{{}}}({})", self.shape, a.join(", "))
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.arcs.iter().map(|d| d.to_string()).collect();
        write!(f, "T[{}; {}]", self.shape, a.join(", "))
    }
}

/// The monomial of a tree; the single-edge tree is 1.
pub fn tree_mono(t: &PlaneTree) -> Monomial {
    if t.vertex_count() == 0 {
        Monomial::one()
    } else {
        Monomial::gen(Generator::Tree(t.clone()))
    }
}

/// All plane trees with `decorations.len() − 1` legs and the given arcs.
pub fn enumerate_trees(decorations: &[Dec]) -> Vec<PlaneTree> {
    assert!(decorations.len() >= 2, "a tree needs at least two arcs");
    Shape::all(decorations.len() - 1)
        .into_iter()
        .map(|s| PlaneTree::new(s, decorations.to_vec()))
        .collect()
}

pub fn catalan(m: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..m as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// All admissible cuts as sets of vertex indices (each index stands for the edge above it).
pub fn admissible_cuts(t: &PlaneTree) -> Vec<Vec<usize>> {
    let vs = t.vertices();
    let n = vs.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let chosen: Vec<usize> = (0..n).filter(|&k| mask & (1 << k) != 0).collect();
        let ok = chosen
            .iter()
            .all(|&a| chosen.iter().all(|&b| a == b || !vs[a].is_below(&vs[b])));
        if ok {
            out.push(chosen);
        }
    }
    out
}

/// `Δ_T(T) = Σ T/(T_{E₁} ∪ ⋯) ⊗ Π T_{Eᵢ}` over admissible cuts.
pub fn coproduct_tree(t: &PlaneTree) -> TensorK {
    let vs = t.vertices();
    let mut out = TensorK::zero(2);
    for cut in admissible_cuts(t) {
        let cv: Vec<Vertex> = cut.iter().map(|&k| vs[k]).collect();
        let left = tree_mono(&t.quotient(&cv));
        let mut right = Monomial::one();
        for v in &cv {
            right = right.mul(&tree_mono(&t.subtree(v)));
        }
        out.add_term(vec![left, right], Q::one());
    }
    out
}

/// `Δ_T` extended multiplicatively to forests and linearly to sums.
pub fn coproduct_forest(x: &LinComb) -> TensorK {
    crate::iterint::coproduct(x)
}

/// `t(I(s₀; s₁…sₘ; sₘ₊₁))`: the sum of all plane trees decorated by `s₀…sₘ₊₁`.
pub fn tree_map(w: &IterWord) -> LinComb {
    let mut out = LinComb::zero();
    if w.weight() == 0 {
        return LinComb::one();
    }
    for t in enumerate_trees(&w.decorations()) {
        out.add_term(tree_mono(&t), Q::one());
    }
    out
}

/// `t` extended multiplicatively to monomials in words.
pub fn tree_map_mono(m: &Monomial) -> LinComb {
    let mut out = LinComb::one();
    for g in m.expanded() {
        match g {
            Generator::Word(w) => out = out.mul(&tree_map(w)),
            other => panic!("tree_map is defined on words only, got {}", other),
        }
    }
    out
}

pub fn tree_map_lc(x: &LinComb) -> LinComb {
    x.map_monos(&tree_map_mono)
}

/// `f^T_v` in additive notation.
pub fn vertex_function(t: &PlaneTree, v: &Vertex) -> LinComb {
    weight1_class(&t.vertex_word(v))
}

/// Orderings of the vertices in which every vertex comes after its parent.
pub fn linear_extensions(vs: &[Vertex]) -> Vec<Vec<usize>> {
    fn go(vs: &[Vertex], placed: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if placed.len() == vs.len() {
            out.push(placed.clone());
            return;
        }
        for k in 0..vs.len() {
            if used[k] {
                continue;
            }
            if let Some(p) = vs[k].parent {
                if !used[p] {
                    continue;
                }
            }
            used[k] = true;
            placed.push(k);
            go(vs, placed, used, out);
            placed.pop();
            used[k] = false;
        }
    }
    let mut out = Vec::new();
    go(vs, &mut Vec::new(), &mut vec![false; vs.len()], &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Omega {
    pub tensor: TensorK,
    /// Total number of (tree, linear extension) pairs.
    pub raw_terms: u64,
    /// Set when two decorations coincide and some vertex function is degenerate.
    pub degenerate: bool,
}

/// `Ω_m = Σ_T Σ_{orderings} f_{v₁} ⊗ ⋯ ⊗ f_{vₘ}`.
pub fn omega(decorations: &[Dec]) -> Omega {
    let m = decorations.len() - 2;
    assert!(m >= 1, "omega needs at least three decorations");
    let mut distinct = decorations.to_vec();
    distinct.sort();
    distinct.dedup();
    let degenerate = distinct.len() != decorations.len();
    let mut tensor = TensorK::zero(m);
    let mut raw = 0;
    for t in enumerate_trees(decorations) {
        let vs = t.vertices();
        let fs: Vec<LinComb> = vs.iter().map(|v| vertex_function(&t, v)).collect();
        for ext in linear_extensions(&vs) {
            raw += 1;
            let factors: Vec<LinComb> = ext.iter().map(|&k| fs[k].clone()).collect();
            tensor.add_pure(&factors, &Q::one());
        }
    }
    Omega { tensor, raw_terms: raw, degenerate }
}
