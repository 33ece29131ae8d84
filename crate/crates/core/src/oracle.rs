//! Brute-force enumeration of unlabeled trees through canonical forms.
//!
//! Rooted trees are built bottom-up: an `n`-vertex rooted tree is a root plus
//! a multiset of smaller rooted trees whose sizes sum to `n - 1`. Choosing the
//! children in non-increasing canonical order yields each isomorphism class
//! exactly once. Free trees are represented by rooting them at their center.
//!
//! Nothing here touches the power series engine, so the counts it produces
//! are an independent check on [`crate::trees`].

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::trees::TreeFamily;
use crate::Coefficient;

/// Default largest tree the enumerator will build.
pub const DEFAULT_CAP: usize = 16;

/// An unlabeled rooted tree in canonical form.
///
/// Trees are totally ordered by size, then by their (descending) child lists
/// compared lexicographically. Children are always stored in descending
/// order, so two rooted trees are isomorphic iff their canonical forms are
/// equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalTree {
    size: usize,
    children: Vec<Arc<CanonicalTree>>,
    height: usize,
}

impl CanonicalTree {
    pub fn leaf() -> Self {
        Self {
            size: 1,
            children: Vec::new(),
            height: 0,
        }
    }

    pub fn from_children(mut children: Vec<Arc<CanonicalTree>>) -> Self {
        children.sort_unstable_by(|a, b| b.cmp(a));
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        let height = children.iter().map(|c| c.height + 1).max().unwrap_or(0);
        Self {
            size,
            children,
            height,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Edges on the longest path from the root down to a leaf.
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn children(&self) -> &[Arc<CanonicalTree>] {
        &self.children
    }

    /// True if no vertex (root included) has exactly one child.
    pub fn is_stree(&self) -> bool {
        self.children.len() != 1 && self.children.iter().all(|c| c.is_stree())
    }

    /// Nested-parenthesis encoding; a single vertex is `()`.
    pub fn encoding(&self) -> String {
        let mut out = String::with_capacity(2 * self.size);
        self.write_encoding(&mut out);
        out
    }

    fn write_encoding(&self, out: &mut String) {
        out.push('(');
        for c in &self.children {
            c.write_encoding(out);
        }
        out.push(')');
    }

    /// Labeled copy with vertices numbered in preorder; the root is vertex 0.
    pub fn to_labeled(&self) -> LabeledTree {
        let mut edges = Vec::with_capacity(self.size - 1);
        let mut next = 1;
        push_subtree_edges(self, 0, &mut next, &mut edges);
        LabeledTree::from_edges(self.size, &edges).expect("a canonical tree is a tree")
    }
}

fn push_subtree_edges(
    tree: &CanonicalTree,
    at: usize,
    next: &mut usize,
    edges: &mut Vec<(usize, usize)>,
) {
    for child in &tree.children {
        let id = *next;
        *next += 1;
        edges.push((at, id));
        push_subtree_edges(child, id, next, edges);
    }
}

impl fmt::Display for CanonicalTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

/// A free tree, stored rooted at its center.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FreeTreeForm {
    /// Rooted at the central vertex.
    VertexCentered(Arc<CanonicalTree>),
    /// The two halves left after deleting the central edge, larger first.
    /// Both halves have the same height.
    EdgeCentered(Arc<CanonicalTree>, Arc<CanonicalTree>),
}

impl FreeTreeForm {
    pub fn edge_centered(a: Arc<CanonicalTree>, b: Arc<CanonicalTree>) -> Self {
        if a >= b {
            FreeTreeForm::EdgeCentered(a, b)
        } else {
            FreeTreeForm::EdgeCentered(b, a)
        }
    }

    pub fn size(&self) -> usize {
        match self {
            FreeTreeForm::VertexCentered(t) => t.size(),
            FreeTreeForm::EdgeCentered(a, b) => a.size() + b.size(),
        }
    }

    /// `(..)` for vertex-centered trees, `(..)-(..)` for edge-centered ones.
    pub fn encoding(&self) -> String {
        match self {
            FreeTreeForm::VertexCentered(t) => t.encoding(),
            FreeTreeForm::EdgeCentered(a, b) => format!("{}-{}", a.encoding(), b.encoding()),
        }
    }

    /// Labeled copy in preorder. Edge-centered trees number the first half
    /// from vertex 0 and the second half after it.
    pub fn to_labeled(&self) -> LabeledTree {
        match self {
            FreeTreeForm::VertexCentered(t) => t.to_labeled(),
            FreeTreeForm::EdgeCentered(a, b) => {
                let mut edges = Vec::with_capacity(a.size() + b.size() - 1);
                let mut next = 1;
                push_subtree_edges(a, 0, &mut next, &mut edges);
                let b_root = next;
                next += 1;
                edges.push((0, b_root));
                push_subtree_edges(b, b_root, &mut next, &mut edges);
                LabeledTree::from_edges(self.size(), &edges).expect("a canonical form is a tree")
            }
        }
    }

    /// True if no vertex has degree 2.
    pub fn is_hit(&self) -> bool {
        fn inner_ok(t: &CanonicalTree) -> bool {
            // a non-root vertex has degree children + 1
            t.children().len() != 1 && t.children().iter().all(|c| inner_ok(c))
        }
        match self {
            FreeTreeForm::VertexCentered(t) => {
                t.children().len() != 2 && t.children().iter().all(|c| inner_ok(c))
            }
            FreeTreeForm::EdgeCentered(a, b) => inner_ok(a) && inner_ok(b),
        }
    }
}

impl fmt::Display for FreeTreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Center {
    Vertex(usize),
    /// Endpoints in increasing order.
    Edge(usize, usize),
}

/// A tree on vertices `0..n` given by adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    adj: Vec<Vec<usize>>,
}

impl LabeledTree {
    /// Validates that the edges form a tree on `n` vertices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} vertices need {} edges, got {}",
                n,
                n - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::NotATree(format!("edge {u}-{v} leaves 0..{n}")));
            }
            if u == v {
                return Err(Error::NotATree(format!("loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let tree = Self { adj };
        // n - 1 edges and connected means acyclic
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &tree.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached != n {
            return Err(Error::NotATree(
                "graph is disconnected or has a cycle".into(),
            ));
        }
        Ok(tree)
    }

    /// Decode a Prüfer sequence over `0..seq.len() + 2`.
    pub fn from_prufer(seq: &[usize]) -> Result<Self> {
        let n = seq.len() + 2;
        let mut degree = vec![1usize; n];
        for &v in seq {
            if v >= n {
                return Err(Error::NotATree(format!("Prüfer entry {v} out of range")));
            }
            degree[v] += 1;
        }
        let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &v in seq {
            let leaf = leaves
                .pop_first()
                .expect("a Prüfer sequence always leaves a leaf");
            edges.push((leaf, v));
            degree[v] -= 1;
            if degree[v] == 1 {
                leaves.insert(v);
            }
        }
        let a = leaves.pop_first().unwrap();
        let b = leaves.pop_first().unwrap();
        edges.push((a, b));
        Self::from_edges(n, &edges)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Each edge once, as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (0..self.len())
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&&v| u < v)
                    .map(move |&v| (u, v))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Relabel vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_edges(self.len(), &edges).expect("permuting a tree gives a tree")
    }

    /// The vertex or edge left after repeatedly deleting all leaves.
    pub fn center(&self) -> Center {
        let n = self.len();
        if n == 1 {
            return Center::Vertex(0);
        }
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                degree[leaf] = 0;
                for &w in &self.adj[leaf] {
                    if degree[w] > 1 {
                        degree[w] -= 1;
                        if degree[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        match layer.as_slice() {
            [v] => Center::Vertex(*v),
            [u, v] => Center::Edge((*u).min(*v), (*u).max(*v)),
            other => unreachable!("leaf stripping left {} vertices", other.len()),
        }
    }

    /// Canonical form of the tree rooted at `root`.
    pub fn rooted_at(&self, root: usize) -> CanonicalTree {
        self.branch(root, None)
    }

    /// Canonical form of the component containing `v` after deleting edge `{v, away}`,
    /// rooted at `v`.
    pub fn branch(&self, v: usize, away: Option<usize>) -> CanonicalTree {
        let children = self.adj[v]
            .iter()
            .filter(|&&w| Some(w) != away)
            .map(|&w| Arc::new(self.branch(w, Some(v))))
            .collect();
        CanonicalTree::from_children(children)
    }

    /// Canonical form of the free tree.
    pub fn free_form(&self) -> FreeTreeForm {
        match self.center() {
            Center::Vertex(c) => FreeTreeForm::VertexCentered(Arc::new(self.rooted_at(c))),
            Center::Edge(u, v) => FreeTreeForm::edge_centered(
                Arc::new(self.branch(u, Some(v))),
                Arc::new(self.branch(v, Some(u))),
            ),
        }
    }

    /// Graphviz `graph` block named `name` with vertices `v0..`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.len() {
            let _ = writeln!(out, "  v{v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Caching generator of rooted and free trees up to a size cap.
#[derive(Debug, Clone)]
pub struct Enumerator {
    cap: usize,
    /// `by_size[k]` holds every rooted tree on `k` vertices, ascending.
    by_size: Vec<Vec<Arc<CanonicalTree>>>,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self::new(DEFAULT_CAP)
    }
}

impl Enumerator {
    pub fn new(cap: usize) -> Self {
        Self {
            cap,
            by_size: vec![Vec::new()],
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            Err(Error::InvalidOrder(0))
        } else if n > self.cap {
            Err(Error::CapExceeded { n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// All rooted trees on `n` vertices, one per isomorphism class, ascending.
    pub fn rooted(&mut self, n: usize) -> Result<&[Arc<CanonicalTree>]> {
        self.check(n)?;
        while self.by_size.len() <= n {
            let k = self.by_size.len();
            let trees = self.build(k);
            self.by_size.push(trees);
        }
        Ok(&self.by_size[n])
    }

    fn build(&self, n: usize) -> Vec<Arc<CanonicalTree>> {
        // pool of every smaller tree, ascending in canonical order
        let pool: Vec<&Arc<CanonicalTree>> = self.by_size[1..n].iter().flatten().collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        extend_multisets(&pool, n - 1, pool.len(), &mut chosen, &mut out);
        out.sort_unstable();
        out
    }

    /// All free trees on `n` vertices, one per isomorphism class, ascending.
    pub fn free(&mut self, n: usize) -> Result<Vec<FreeTreeForm>> {
        self.check(n)?;
        let mut out: Vec<FreeTreeForm> = self
            .rooted(n)?
            .iter()
            .filter(|t| is_vertex_center(t))
            .cloned()
            .map(FreeTreeForm::VertexCentered)
            .collect();
        for big_size in n.div_ceil(2)..n {
            let small_size = n - big_size;
            let bigs = self.rooted(big_size)?.to_vec();
            let smalls = self.rooted(small_size)?.to_vec();
            for a in &bigs {
                for b in &smalls {
                    if a.height() == b.height() && (big_size != small_size || a >= b) {
                        out.push(FreeTreeForm::EdgeCentered(a.clone(), b.clone()));
                    }
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Number of trees of `family` on `n` vertices, by explicit enumeration.
    ///
    /// The three rooted irreducible families are counted by rooting every
    /// irreducible free tree in all possible ways and removing duplicates.
    pub fn count(&mut self, family: TreeFamily, n: usize) -> Result<Coefficient> {
        let count = match family {
            TreeFamily::Rooted => self.rooted(n)?.len(),
            TreeFamily::STree => self.rooted(n)?.iter().filter(|t| t.is_stree()).count(),
            TreeFamily::Unrooted => self.free(n)?.len(),
            TreeFamily::Hit => filter_hit(self.free(n)?).len(),
            TreeFamily::HitVertexRooted
            | TreeFamily::HitEdgeRooted
            | TreeFamily::HitVertexEdgeRooted => filter_hit(self.free(n)?)
                .iter()
                .map(|form| distinct_rootings(&form.to_labeled(), family))
                .sum(),
        };
        Ok(Coefficient::from(count))
    }
}

/// Push every multiset of `pool` entries with total size `left`, using
/// indices below `bound` in non-increasing order.
fn extend_multisets(
    pool: &[&Arc<CanonicalTree>],
    left: usize,
    bound: usize,
    chosen: &mut Vec<Arc<CanonicalTree>>,
    out: &mut Vec<Arc<CanonicalTree>>,
) {
    if left == 0 {
        // chosen is already descending
        let size = 1 + chosen.iter().map(|c| c.size()).sum::<usize>();
        let height = chosen.iter().map(|c| c.height() + 1).max().unwrap_or(0);
        out.push(Arc::new(CanonicalTree {
            size,
            children: chosen.clone(),
            height,
        }));
        return;
    }
    for idx in (0..bound).rev() {
        let t = pool[idx];
        if t.size() > left {
            continue;
        }
        chosen.push(t.clone());
        extend_multisets(pool, left - t.size(), idx + 1, chosen, out);
        chosen.pop();
    }
}

/// The root is the center iff at least two branches reach the maximal depth.
fn is_vertex_center(t: &CanonicalTree) -> bool {
    if t.children().is_empty() {
        return true;
    }
    let deepest = t.height() - 1;
    t.children()
        .iter()
        .filter(|c| c.height() == deepest)
        .count()
        >= 2
}

fn distinct_rootings(tree: &LabeledTree, family: TreeFamily) -> usize {
    match family {
        TreeFamily::HitVertexRooted => (0..tree.len())
            .map(|v| tree.rooted_at(v))
            .collect::<BTreeSet<_>>()
            .len(),
        TreeFamily::HitEdgeRooted => tree
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (tree.branch(u, Some(v)), tree.branch(v, Some(u)));
                if a >= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect::<BTreeSet<_>>()
            .len(),
        TreeFamily::HitVertexEdgeRooted => tree
            .edges()
            .into_iter()
            .flat_map(|(u, v)| [(u, v), (v, u)])
            .map(|(at, other)| (tree.branch(at, Some(other)), tree.branch(other, Some(at))))
            .collect::<BTreeSet<_>>()
            .len(),
        other => unreachable!("{other} is not a rooted irreducible family"),
    }
}

/// Keep the trees with no vertex of degree 2.
pub fn filter_hit(trees: Vec<FreeTreeForm>) -> Vec<FreeTreeForm> {
    trees.into_iter().filter(FreeTreeForm::is_hit).collect()
}

/// Every rooted tree on `n` vertices with the default cap.
pub fn gen_rooted(n: usize) -> Result<Vec<Arc<CanonicalTree>>> {
    Ok(Enumerator::default().rooted(n)?.to_vec())
}

/// Every free tree on `n` vertices with the default cap.
pub fn gen_free(n: usize) -> Result<Vec<FreeTreeForm>> {
    Enumerator::default().free(n)
}

pub fn count_family(family: TreeFamily, n: usize) -> Result<Coefficient> {
    Enumerator::default().count(family, n)
}

/// Center of an explicit labeled tree.
pub fn center_of(tree: &LabeledTree) -> Center {
    tree.center()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn counts(f: impl Fn(&mut Enumerator, usize) -> usize, upto: usize) -> Vec<usize> {
        let mut e = Enumerator::default();
        (1..=upto).map(|n| f(&mut e, n)).collect()
    }

    #[test]
    fn rooted_counts() {
        let got = counts(|e, n| e.rooted(n).unwrap().len(), 9);
        assert_eq!(got, vec![1, 1, 2, 4, 9, 20, 48, 115, 286]);
    }

    #[test]
    fn free_counts() {
        let got = counts(|e, n| e.free(n).unwrap().len(), 10);
        assert_eq!(got, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn hit_counts() {
        let got = counts(|e, n| filter_hit(e.free(n).unwrap()).len(), 10);
        assert_eq!(got, vec![1, 1, 0, 1, 1, 2, 2, 4, 5, 10]);
    }

    #[test]
    fn family_counts() {
        let mut e = Enumerator::default();
        assert_eq!(e.count(TreeFamily::Hit, 10).unwrap(), 10.into());
        assert_eq!(e.count(TreeFamily::STree, 2).unwrap(), 0.into());
        assert_eq!(e.count(TreeFamily::Unrooted, 6).unwrap(), 6.into());
        assert_eq!(e.count(TreeFamily::HitVertexRooted, 3).unwrap(), 0.into());
        assert_eq!(e.count(TreeFamily::HitEdgeRooted, 2).unwrap(), 1.into());
        assert_eq!(e.count(TreeFamily::HitEdgeRooted, 3).unwrap(), 0.into());
        assert_eq!(
            e.count(TreeFamily::HitVertexEdgeRooted, 2).unwrap(),
            1.into()
        );
    }

    #[test]
    fn vertex_rooted_hit_matches_direct_filter() {
        // root has != 2 children, every other vertex != 1 child
        fn ok(t: &CanonicalTree) -> bool {
            t.children().len() != 2 && t.children().iter().all(|c| c.is_stree())
        }
        let mut e = Enumerator::default();
        for n in 1..=11 {
            let direct = e.rooted(n).unwrap().iter().filter(|t| ok(t)).count();
            assert_eq!(
                e.count(TreeFamily::HitVertexRooted, n).unwrap(),
                direct.into(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        let mut e = Enumerator::new(5);
        assert_eq!(
            e.rooted(6).unwrap_err(),
            Error::CapExceeded { n: 6, cap: 5 }
        );
        assert_eq!(e.free(0).unwrap_err(), Error::InvalidOrder(0));
        assert!(e.rooted(5).is_ok());
    }

    #[test]
    fn canonical_children_are_descending() {
        let mut e = Enumerator::default();
        for t in e.rooted(8).unwrap() {
            assert!(t.children().windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(t.size(), 8);
        }
    }

    #[test]
    fn single_vertex_encoding() {
        let trees = gen_rooted(1).unwrap();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].encoding(), "()");
        assert_eq!(gen_free(2).unwrap()[0].encoding(), "()-()");
    }

    #[test]
    fn centers_of_small_trees() {
        let path = LabeledTree::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(center_of(&path), Center::Vertex(1));
        let edge = LabeledTree::from_edges(2, &[(1, 0)]).unwrap();
        assert_eq!(center_of(&edge), Center::Edge(0, 1));
        let single = LabeledTree::from_edges(1, &[]).unwrap();
        assert_eq!(center_of(&single), Center::Vertex(0));
    }

    #[test]
    fn figure_tree_has_center_five() {
        // labels 1..=8 shifted down by one
        let edges = [(3, 6), (1, 6), (2, 6), (6, 5), (5, 4), (5, 7), (4, 8)];
        let shifted: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        let t = LabeledTree::from_edges(8, &shifted).unwrap();
        assert_eq!(center_of(&t), Center::Vertex(5 - 1));
    }

    #[test]
    fn rejects_non_trees() {
        assert!(matches!(
            LabeledTree::from_edges(0, &[]),
            Err(Error::NotATree(_))
        ));
        let cycle_plus_isolated = [(0, 1), (1, 2), (2, 0)];
        assert!(matches!(
            LabeledTree::from_edges(4, &cycle_plus_isolated),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            LabeledTree::from_edges(3, &[(0, 1)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            LabeledTree::from_edges(2, &[(0, 0)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            LabeledTree::from_edges(2, &[(0, 5)]),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn forms_reconstruct_to_trees_and_back() {
        let mut e = Enumerator::default();
        for n in 1..=11 {
            for form in e.free(n).unwrap() {
                let t = form.to_labeled();
                assert_eq!(t.len(), n);
                assert_eq!(t.edges().len(), n - 1);
                assert_eq!(t.free_form(), form);
                if let FreeTreeForm::EdgeCentered(a, b) = &form {
                    assert_eq!(a.height(), b.height());
                }
            }
        }
    }

    fn random_tree(n: usize, rng: &mut StdRng) -> LabeledTree {
        if n == 1 {
            return LabeledTree::from_edges(1, &[]).unwrap();
        }
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        LabeledTree::from_prufer(&seq).unwrap()
    }

    #[test]
    fn relabeling_preserves_canonical_forms_and_centers() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..=9 {
            for _ in 0..200 {
                let t = random_tree(n, &mut rng);
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let p = t.permuted(&perm);
                assert_eq!(t.free_form(), p.free_form());
                assert_eq!(t.rooted_at(0), p.rooted_at(perm[0]));
                let mapped = match t.center() {
                    Center::Vertex(v) => Center::Vertex(perm[v]),
                    Center::Edge(u, v) => Center::Edge(perm[u].min(perm[v]), perm[u].max(perm[v])),
                };
                assert_eq!(p.center(), mapped);
            }
        }
    }

    #[test]
    fn dot_lists_vertices_and_edges() {
        let t = LabeledTree::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(
            t.to_dot("t0"),
            "graph t0 {\n  v0;\n  v1;\n  v2;\n  v0 -- v1;\n  v0 -- v2;\n}\n"
        );
    }
}
