use std::cmp::Reverse;
use std::fmt;

use crate::error::{Error, Result};
use crate::family::StatsTriple;

/// An explicit rooted tree-like multigraph.
///
/// Each child is stored with the number of extra parallel edges on the edge
/// joining it to this node (0 means a plain tree edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedMultigraph {
    children: Vec<(RootedMultigraph, usize)>,
    v_count: usize,
    e_count: usize,
}

/// Textual canonical form of a rooted multigraph.
///
/// A node is written `(` + its children + `)`, each child as the decimal
/// multiplicity of its root edge followed by the child's own form. Children
/// are ordered by vertex count, then multiple-edge count, then root-edge
/// multiplicity, then form, all descending. A single vertex is `()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Parse a textual form back into a multigraph. Accepts any child order.
    pub fn parse(text: &str) -> Result<RootedMultigraph> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let g = parse_node(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Domain(format!("trailing input at byte {pos} in {text:?}")));
        }
        Ok(g)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn parse_node(bytes: &[u8], pos: &mut usize) -> Result<RootedMultigraph> {
    let bad = |at: usize| Error::Domain(format!("malformed multigraph code at byte {at}"));
    if bytes.get(*pos) != Some(&b'(') {
        return Err(bad(*pos));
    }
    *pos += 1;
    let mut children = Vec::new();
    loop {
        match bytes.get(*pos) {
            Some(b')') => {
                *pos += 1;
                return Ok(RootedMultigraph::new(children));
            }
            Some(c) if c.is_ascii_digit() => {
                let start = *pos;
                while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
                    *pos += 1;
                }
                let mult: usize = std::str::from_utf8(&bytes[start..*pos])
                    .ok()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad(start))?;
                children.push((parse_node(bytes, pos)?, mult));
            }
            _ => return Err(bad(*pos)),
        }
    }
}

/// Where the centroid of the underlying tree sits relative to the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentroidType {
    /// The root is the unique centroid vertex.
    UnicentroidAtRoot,
    /// The tree has a centroid edge splitting it into two halves.
    Bicentroid,
    /// The unique centroid vertex is not the root.
    Elsewhere,
}

impl RootedMultigraph {
    pub fn leaf() -> Self {
        Self::new(Vec::new())
    }

    pub fn new(children: Vec<(RootedMultigraph, usize)>) -> Self {
        let v_count = 1 + children.iter().map(|(c, _)| c.v_count).sum::<usize>();
        let e_count = children.iter().map(|(c, m)| c.e_count + m).sum();
        Self {
            children,
            v_count,
            e_count,
        }
    }

    pub fn children(&self) -> &[(RootedMultigraph, usize)] {
        &self.children
    }

    pub fn v_count(&self) -> usize {
        self.v_count
    }

    /// Extra edges in the whole multigraph.
    pub fn e_count(&self) -> usize {
        self.e_count
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        let mut keyed: Vec<_> = self
            .children
            .iter()
            .map(|(c, m)| (c.v_count, c.e_count, *m, c.canonical_code()))
            .collect();
        keyed.sort_by(|a, b| b.cmp(a));
        let mut s = String::from("(");
        for (_, _, m, code) in keyed {
            s.push_str(&m.to_string());
            s.push_str(&code.0);
        }
        s.push(')');
        CanonicalCode(s)
    }

    /// The same multigraph with children in canonical order at every node.
    pub fn canonicalize(&self) -> Self {
        let mut children: Vec<_> = self.children.iter().map(|(c, m)| (c.canonicalize(), *m)).collect();
        children.sort_by_cached_key(|(c, m)| Reverse((c.v_count, c.e_count, *m, c.canonical_code())));
        Self::new(children)
    }

    pub fn stats(&self) -> StatsTriple {
        let max_v = self.children.iter().map(|(c, _)| c.v_count).max().unwrap_or(0);
        let max_m = self
            .children
            .iter()
            .filter(|(c, _)| c.v_count == max_v)
            .map(|(c, _)| c.e_count)
            .max()
            .unwrap_or(0);
        let max_l = self
            .children
            .iter()
            .filter(|(c, _)| c.v_count == max_v && c.e_count == max_m)
            .map(|(_, m)| *m)
            .max()
            .unwrap_or(0);
        StatsTriple { max_v, max_m, max_l }
    }

    pub fn centroid_type(&self) -> CentroidType {
        let n = self.v_count;
        if n.is_multiple_of(2) && self.has_descendant_of_size(n / 2) {
            CentroidType::Bicentroid
        } else if self.children.iter().all(|(c, _)| c.v_count <= (n - 1) / 2) {
            CentroidType::UnicentroidAtRoot
        } else {
            CentroidType::Elsewhere
        }
    }

    fn has_descendant_of_size(&self, size: usize) -> bool {
        self.children
            .iter()
            .any(|(c, _)| c.v_count == size || c.has_descendant_of_size(size))
    }

    /// Undirected edge list `(a, b, multiplicity)` with the root as vertex 0.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        fn walk(g: &RootedMultigraph, me: usize, next: &mut usize, out: &mut Vec<(usize, usize, usize)>) {
            for (c, m) in &g.children {
                let id = *next;
                *next += 1;
                out.push((me, id, *m));
                walk(c, id, next, out);
            }
        }
        let mut out = Vec::with_capacity(self.v_count - 1);
        let mut next = 1;
        walk(self, 0, &mut next, &mut out);
        out
    }

    /// Canonical form of the multigraph with the root forgotten.
    ///
    /// The tree is re-rooted at its centroid. A bicentroidal tree is written
    /// as its centroid-edge multiplicity and the ordered pair of half codes.
    pub fn free_code(&self) -> String {
        let n = self.v_count;
        let mut adj = vec![Vec::new(); n];
        for (a, b, m) in self.edges() {
            adj[a].push((b, m));
            adj[b].push((a, m));
        }
        // subtree sizes with vertex 0 as root; ids are assigned in preorder
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            order.push(x);
            for &(y, _) in &adj[x] {
                if y != parent[x] {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut size = vec![1usize; n];
        for &x in order.iter().rev() {
            if x != 0 {
                size[parent[x]] += size[x];
            }
        }
        let heaviest = |x: usize| {
            adj[x]
                .iter()
                .map(|&(y, _)| if y == parent[x] { n - size[x] } else { size[y] })
                .max()
                .unwrap_or(0)
        };
        let centroids: Vec<usize> = (0..n).filter(|&x| heaviest(x) <= n / 2).collect();
        match centroids.as_slice() {
            [c] => format!("U{}", root_at(&adj, *c, usize::MAX).canonical_code()),
            [x, y] => {
                let m = adj[*x]
                    .iter()
                    .find(|&&(z, _)| z == *y)
                    .map(|&(_, m)| m)
                    .expect("centroids adjacent");
                let cx = root_at(&adj, *x, *y).canonical_code();
                let cy = root_at(&adj, *y, *x).canonical_code();
                let (lo, hi) = if cx <= cy { (cx, cy) } else { (cy, cx) };
                format!("B{m}:{lo}{hi}")
            }
            other => unreachable!("a tree has one or two centroids, found {}", other.len()),
        }
    }
}

/// The component containing `root` after removing the edge to `skip`,
/// rooted at `root`.
fn root_at(adj: &[Vec<(usize, usize)>], root: usize, skip: usize) -> RootedMultigraph {
    let children = adj[root]
        .iter()
        .filter(|&&(y, _)| y != skip)
        .map(|&(y, m)| (root_at(adj, y, root), m))
        .collect();
    RootedMultigraph::new(children)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> RootedMultigraph {
        CanonicalCode::parse(text).unwrap()
    }

    /// The 10-vertex, 7-multiple-edge worked example: children of sizes
    /// 4, 4, 1; both 4-vertex subtrees carry 2 multiple edges, one of them
    /// hangs by a doubled edge, the leaf by a tripled one.
    fn worked_example_canonical() -> RootedMultigraph {
        g("(1(0(2())0())0(1()1()0())2())")
    }

    fn worked_example_shuffled() -> RootedMultigraph {
        g("(2()0(0()1()1())1(0()0(2())))")
    }

    #[test]
    fn single_vertex() {
        let leaf = RootedMultigraph::leaf();
        assert_eq!(leaf.canonical_code().as_str(), "()");
        assert_eq!(leaf.stats(), StatsTriple::default());
        assert_eq!(leaf.centroid_type(), CentroidType::UnicentroidAtRoot);
    }

    #[test]
    fn worked_example() {
        let a = worked_example_canonical();
        let b = worked_example_shuffled();
        assert_eq!(a.v_count(), 10);
        assert_eq!(a.e_count(), 7);
        assert_eq!(a.canonical_code(), b.canonical_code());
        assert_eq!(a.canonical_code().as_str(), "(1(0(2())0())0(1()1()0())2())");
        assert_eq!(
            a.stats(),
            StatsTriple {
                max_v: 4,
                max_m: 2,
                max_l: 1
            }
        );
        assert_eq!(b.stats(), a.stats());
    }

    #[test]
    fn two_leaves_with_multiplicities() {
        let x = g("(3()1())");
        assert_eq!(
            x.stats(),
            StatsTriple {
                max_v: 1,
                max_m: 0,
                max_l: 3
            }
        );
        assert_eq!(g("(1()3())").canonical_code().as_str(), "(3()1())");
    }

    #[test]
    fn centroid_types() {
        assert_eq!(g("(0())").centroid_type(), CentroidType::Bicentroid);
        assert_eq!(g("(0(0(0())))").centroid_type(), CentroidType::Bicentroid);
        assert_eq!(g("(0(0(0(0()))))").centroid_type(), CentroidType::Elsewhere);
        assert_eq!(g("(0(0())0(0()))").centroid_type(), CentroidType::UnicentroidAtRoot);
        assert_eq!(g("(0(0()0()))").centroid_type(), CentroidType::Elsewhere);
    }

    #[test]
    fn free_code_forgets_root() {
        // a 3-path with multiplicities 2 and 0, rooted at each vertex
        let a = g("(2(0()))");
        let b = g("(0()2())");
        let c = g("(0(2()))");
        assert_eq!(a.free_code(), b.free_code());
        assert_eq!(b.free_code(), c.free_code());
        assert_ne!(a.free_code(), g("(1()1())").free_code());
        // both halves of a 4-path
        assert_eq!(g("(1(0(0())))").free_code(), g("(0(0(1())))").free_code());
        assert_ne!(g("(1(0(0())))").free_code(), g("(0(1(0())))").free_code());
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "(", "(0)", "()x", "(x())", "((()))"] {
            assert!(CanonicalCode::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn canonicalize_matches_code() {
        let b = worked_example_shuffled();
        let c = b.canonicalize();
        assert_eq!(c.canonical_code(), b.canonical_code());
        assert_eq!(c, worked_example_canonical());
    }
}
