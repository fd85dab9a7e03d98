//! Rooted path/tree decompositions: validation, length, trimming, and
//! the separator properties that the decomposition-based burners lean on.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionKind {
    Path,
    Tree,
}

/// A rooted tree of bags over the vertices of a graph. A path
/// decomposition is the special case where the bag tree is a chain
/// rooted at one end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    bags: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    root: usize,
    kind: DecompositionKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionLength {
    /// Max over bags of the max pairwise graph distance within the bag.
    pub length: usize,
}

impl Decomposition {
    /// Builds a decomposition from bags and parent links. The kind is
    /// inferred: a chain rooted at one end is a path decomposition.
    /// Structural tree errors (bad root, cycles, stray links) are
    /// rejected here; the decomposition axioms are checked by
    /// [`Decomposition::validate`].
    pub fn new(bags: Vec<Vec<usize>>, parent: Vec<Option<usize>>, root: usize) -> Result<Self> {
        let count = bags.len();
        if count == 0 {
            return Err(Error::InvalidDecomposition("no bags".into()));
        }
        if parent.len() != count {
            return Err(Error::InvalidDecomposition(format!(
                "{} bags but {} parent entries",
                count,
                parent.len()
            )));
        }
        if root >= count {
            return Err(Error::InvalidDecomposition(format!(
                "root {} out of range",
                root + 1
            )));
        }
        if parent[root].is_some() {
            return Err(Error::InvalidDecomposition("root bag has a parent".into()));
        }
        for (i, p) in parent.iter().enumerate() {
            match p {
                None if i != root => {
                    return Err(Error::InvalidDecomposition(format!(
                        "multiple roots: bag {} has no parent",
                        i + 1
                    )));
                }
                Some(p) if *p >= count => {
                    return Err(Error::InvalidDecomposition(format!(
                        "bag {} has out-of-range parent {}",
                        i + 1,
                        p + 1
                    )));
                }
                _ => {}
            }
        }
        // every bag must reach the root without revisiting (no cycles)
        for start in 0..count {
            let mut seen = vec![false; count];
            let mut cur = start;
            while let Some(p) = parent[cur] {
                if seen[cur] {
                    return Err(Error::InvalidDecomposition(format!(
                        "cycle in tree edges through bag {}",
                        cur + 1
                    )));
                }
                seen[cur] = true;
                cur = p;
            }
            if cur != root {
                return Err(Error::InvalidDecomposition(format!(
                    "bag {} does not reach the root",
                    start + 1
                )));
            }
        }
        let mut bags = bags;
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        let kind = if Self::is_chain(&parent, root) {
            DecompositionKind::Path
        } else {
            DecompositionKind::Tree
        };
        Ok(Decomposition {
            bags,
            parent,
            root,
            kind,
        })
    }

    fn is_chain(parent: &[Option<usize>], root: usize) -> bool {
        let count = parent.len();
        let mut child_count = vec![0usize; count];
        for p in parent.iter().flatten() {
            child_count[*p] += 1;
        }
        child_count.iter().all(|&c| c <= 1) && child_count[root] == count.saturating_sub(1).min(1)
    }

    pub fn kind(&self) -> DecompositionKind {
        self.kind
    }

    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, i: usize) -> &[usize] {
        &self.bags[i]
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    /// Bag indices in root-to-leaf order for a path decomposition.
    pub fn chain_order(&self) -> Result<Vec<usize>> {
        if self.kind != DecompositionKind::Path {
            return Err(Error::InvalidDecomposition(
                "not a path decomposition".into(),
            ));
        }
        let mut children = vec![None; self.bags.len()];
        for (i, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                children[*p] = Some(i);
            }
        }
        let mut order = vec![self.root];
        while let Some(next) = children[*order.last().unwrap()] {
            order.push(next);
        }
        Ok(order)
    }

    /// Depth of each bag (root = 0).
    pub fn depths(&self) -> Vec<usize> {
        let n = self.bags.len();
        let mut depth = vec![usize::MAX; n];
        depth[self.root] = 0;
        // bags reach the root by construction, so this settles in n passes
        loop {
            let mut changed = false;
            for i in 0..n {
                if let Some(p) = self.parent[i] {
                    if depth[p] != usize::MAX && depth[i] == usize::MAX {
                        depth[i] = depth[p] + 1;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        depth
    }

    /// Bag indices of the subtree rooted at `b`.
    pub fn subtree(&self, b: usize) -> Vec<usize> {
        let n = self.bags.len();
        (0..n)
            .filter(|&start| {
                let mut cur = start;
                loop {
                    if cur == b {
                        return true;
                    }
                    match self.parent[cur] {
                        Some(p) => cur = p,
                        None => return false,
                    }
                }
            })
            .collect()
    }

    /// Checks the three decomposition axioms against `g`, reporting the
    /// first violation with witnesses.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        for (i, bag) in self.bags.iter().enumerate() {
            if let Some(&v) = bag.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidDecomposition(format!(
                    "bag {} contains out-of-range vertex {}",
                    i + 1,
                    v
                )));
            }
        }
        // axiom 1: every vertex appears in some bag
        let mut appears = vec![false; n];
        for bag in &self.bags {
            for &v in bag {
                appears[v] = true;
            }
        }
        if let Some(v) = appears.iter().position(|&a| !a) {
            return Err(Error::InvalidDecomposition(format!(
                "vertex {v} appears in no bag"
            )));
        }
        // axiom 2: every edge is covered by some bag
        for (u, v) in g.edges() {
            let covered = self
                .bags
                .iter()
                .any(|bag| bag.contains(&u) && bag.contains(&v));
            if !covered {
                return Err(Error::InvalidDecomposition(format!(
                    "edge {{{u}, {v}}} covered by no bag"
                )));
            }
        }
        // axiom 3: the bags containing v form a connected subtree; for a
        // tree, #bags - #tree-edges-with-both-endpoints must equal 1
        for v in 0..n {
            let holding = self.bags.iter().filter(|b| b.contains(&v)).count();
            let linking = (0..self.bags.len())
                .filter(|&i| {
                    self.parent[i]
                        .is_some_and(|p| self.bags[i].contains(&v) && self.bags[p].contains(&v))
                })
                .count();
            if holding != linking + 1 {
                return Err(Error::InvalidDecomposition(format!(
                    "bags containing vertex {v} do not form a connected subtree"
                )));
            }
        }
        Ok(())
    }

    /// Max intra-bag distance. Requires a valid decomposition of a
    /// connected graph.
    pub fn length_of(&self, g: &Graph) -> Result<DecompositionLength> {
        let mut cache: HashMap<usize, Vec<Option<usize>>> = HashMap::new();
        let mut length = 0;
        for bag in &self.bags {
            for (i, &u) in bag.iter().enumerate() {
                let dist = match cache.get(&u) {
                    Some(d) => d,
                    None => {
                        let o = g.bfs(u)?;
                        cache.entry(u).or_insert_with(|| o.distances().to_vec())
                    }
                };
                for &v in &bag[i + 1..] {
                    match dist[v] {
                        Some(d) => length = length.max(d),
                        None => {
                            return Err(Error::Disconnected);
                        }
                    }
                }
            }
        }
        Ok(DecompositionLength { length })
    }

    /// Removes every non-root subtree whose bag union is contained in
    /// its parent bag, repeating until none remains. The result is
    /// trimmed: every non-root subtree owns a vertex private to it.
    pub fn trim(&self, _g: &Graph) -> Result<Decomposition> {
        let mut bags = self.bags.clone();
        let mut parent = self.parent.clone();
        let mut root = self.root;
        loop {
            let count = bags.len();
            if count == 1 {
                break;
            }
            let current = Decomposition::new(bags.clone(), parent.clone(), root)?;
            let mut removable: Option<usize> = None;
            for (b, par) in parent.iter().enumerate() {
                if b == root {
                    continue;
                }
                let p = par.unwrap();
                let mut union: Vec<usize> = current
                    .subtree(b)
                    .into_iter()
                    .flat_map(|i| bags[i].iter().copied())
                    .collect();
                union.sort_unstable();
                union.dedup();
                if union.iter().all(|v| bags[p].contains(v)) {
                    removable = Some(b);
                    break;
                }
            }
            let Some(b) = removable else { break };
            let drop: Vec<usize> = current.subtree(b);
            let mut remap = vec![None; count];
            let mut kept = 0;
            for (i, slot) in remap.iter_mut().enumerate() {
                if !drop.contains(&i) {
                    *slot = Some(kept);
                    kept += 1;
                }
            }
            bags = (0..count)
                .filter(|i| remap[*i].is_some())
                .map(|i| bags[i].clone())
                .collect();
            parent = (0..count)
                .filter(|i| remap[*i].is_some())
                .map(|i| parent[i].map(|p| remap[p].expect("parent of a kept bag is kept")))
                .collect();
            root = remap[root].expect("root is never removed");
        }
        Decomposition::new(bags, parent, root)
    }

    /// True iff every non-root subtree owns a private vertex.
    pub fn is_trimmed(&self) -> bool {
        let count = self.bags.len();
        for b in 0..count {
            if b == self.root {
                continue;
            }
            let inside = self.subtree(b);
            let outside_union: Vec<usize> = (0..count)
                .filter(|i| !inside.contains(i))
                .flat_map(|i| self.bags[i].iter().copied())
                .collect();
            let has_private = inside
                .iter()
                .flat_map(|&i| self.bags[i].iter())
                .any(|v| !outside_union.contains(v));
            if !has_private {
                return false;
            }
        }
        true
    }

    /// For a trimmed decomposition and a non-root bag j, removing the
    /// vertices of bag j must disconnect the subtree side from the rest.
    pub fn separator_check(&self, g: &Graph, j: usize) -> Result<bool> {
        if j == self.root {
            return Err(Error::InvalidInput(
                "separator check applies to non-root bags".into(),
            ));
        }
        let n = g.vertex_count();
        let inside_bags = self.subtree(j);
        let mut in_side = vec![false; n];
        for &i in &inside_bags {
            for &v in &self.bags[i] {
                in_side[v] = true;
            }
        }
        let mut out_side = vec![false; n];
        for i in 0..self.bags.len() {
            if !inside_bags.contains(&i) {
                for &v in &self.bags[i] {
                    out_side[v] = true;
                }
            }
        }
        let mut blocked = vec![false; n];
        for &v in &self.bags[j] {
            blocked[v] = true;
        }
        // BFS in G - B_j from the subtree side; the check fails if it
        // touches any vertex appearing only outside the subtree
        let mut seen = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| in_side[v] && !blocked[v]).collect();
        for &v in &queue {
            seen[v] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !blocked[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Ok((0..n).all(|v| !(seen[v] && out_side[v] && !in_side[v])))
    }

    /// Same bags with the tree re-rooted at `new_root`: parent links on
    /// the path from `new_root` to the old root are reversed.
    pub fn rerooted(&self, new_root: usize) -> Result<Decomposition> {
        if new_root >= self.bags.len() {
            return Err(Error::InvalidInput(format!(
                "root bag {} out of range",
                new_root + 1
            )));
        }
        let mut parent = self.parent.clone();
        let mut cur = new_root;
        let mut prev: Option<usize> = None;
        loop {
            let next = parent[cur];
            parent[cur] = prev;
            prev = Some(cur);
            match next {
                Some(p) => cur = p,
                None => break,
            }
        }
        Decomposition::new(self.bags.clone(), parent, new_root)
    }

    /// Lowest bag index containing `v`.
    pub fn canonical_bag(&self, v: usize) -> Option<usize> {
        (0..self.bags.len()).find(|&i| self.bags[i].contains(&v))
    }

    /// Bag indices on the tree path between bags `a` and `b`, inclusive.
    pub fn bag_path(&self, a: usize, b: usize) -> Vec<usize> {
        let depths = self.depths();
        let (mut x, mut y) = (a, b);
        let mut from_a = vec![x];
        let mut from_b = vec![y];
        while depths[x] > depths[y] {
            x = self.parent[x].unwrap();
            from_a.push(x);
        }
        while depths[y] > depths[x] {
            y = self.parent[y].unwrap();
            from_b.push(y);
        }
        while x != y {
            x = self.parent[x].unwrap();
            y = self.parent[y].unwrap();
            from_a.push(x);
            from_b.push(y);
        }
        from_b.pop();
        from_b.reverse();
        from_a.extend(from_b);
        from_a
    }

    /// Takes one deterministic shortest u-v path in `g` and checks that
    /// every bag on the tree path between the canonical bags of u and v
    /// contains a vertex of that path.
    pub fn path_hits_bags(&self, g: &Graph, u: usize, v: usize) -> Result<bool> {
        let path = g.shortest_path(u, v)?;
        let bu = self
            .canonical_bag(u)
            .ok_or_else(|| Error::InvalidDecomposition(format!("vertex {u} in no bag")))?;
        let bv = self
            .canonical_bag(v)
            .ok_or_else(|| Error::InvalidDecomposition(format!("vertex {v} in no bag")))?;
        Ok(self
            .bag_path(bu, bv)
            .into_iter()
            .all(|i| self.bags[i].iter().any(|w| path.contains(w))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::builders::path;
    use crate::Graph;

    fn chain_decomp(bags: Vec<Vec<usize>>) -> Decomposition {
        let count = bags.len();
        let parent = (0..count)
            .map(|i| if i == 0 { None } else { Some(i - 1) })
            .collect();
        Decomposition::new(bags, parent, 0).unwrap()
    }

    #[test]
    fn validate_p3_pairs_ok() {
        let g = path(3);
        let d = chain_decomp(vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(d.kind(), DecompositionKind::Path);
        assert!(d.validate(&g).is_ok());
    }

    #[test]
    fn validate_catches_uncovered_edge() {
        let g = path(3);
        let d = chain_decomp(vec![vec![0], vec![1], vec![2]]);
        let err = d.validate(&g).unwrap_err();
        assert!(err.to_string().contains("edge"));
    }

    #[test]
    fn validate_catches_disconnected_vertex_bags() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 3)]).unwrap();
        // vertex 0 in bags 1 and 3 but not 2
        let d = chain_decomp(vec![vec![0, 1], vec![1, 2], vec![0, 3]]);
        let err = d.validate(&g).unwrap_err();
        assert!(err.to_string().contains("connected subtree"));
    }

    #[test]
    fn rejects_malformed_trees() {
        assert!(Decomposition::new(vec![vec![0]], vec![Some(0)], 0).is_err());
        assert!(Decomposition::new(vec![vec![0], vec![0]], vec![None, None], 0).is_err());
        assert!(Decomposition::new(
            vec![vec![0], vec![0], vec![0]],
            vec![None, Some(2), Some(1)],
            0
        )
        .is_err());
    }

    #[test]
    fn length_of_clique_bags() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let d = chain_decomp(vec![vec![0, 1, 2]]);
        assert_eq!(d.length_of(&g).unwrap().length, 1);
    }

    #[test]
    fn length_of_spread_bag() {
        // bag holding two vertices at distance 3
        let g = path(4);
        let d = chain_decomp(vec![vec![0, 1, 2, 3]]);
        assert_eq!(d.length_of(&g).unwrap().length, 3);
    }

    #[test]
    fn trim_removes_redundant_child() {
        let g = path(3);
        // parent {0,1,2} with child {0,1}
        let d =
            Decomposition::new(vec![vec![0, 1, 2], vec![0, 1]], vec![None, Some(0)], 0).unwrap();
        let t = d.trim(&g).unwrap();
        assert_eq!(t.bag_count(), 1);
        assert_eq!(t.bag(0), &[0, 1, 2]);
    }

    #[test]
    fn trim_is_idempotent() {
        let g = path(5);
        let d = chain_decomp(vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]]);
        let t = d.trim(&g).unwrap();
        assert_eq!(t, d);
        assert!(t.is_trimmed());
    }

    #[test]
    fn trim_cascades() {
        // B1={0,1} <- B2={0,1} <- B3={0,1,2}, rooted at B3
        let g = path(3);
        let d = Decomposition::new(
            vec![vec![0, 1], vec![0, 1], vec![0, 1, 2]],
            vec![Some(1), Some(2), None],
            2,
        )
        .unwrap();
        let t = d.trim(&g).unwrap();
        assert_eq!(t.bag_count(), 1);
        assert_eq!(t.bag(0), &[0, 1, 2]);
    }

    #[test]
    fn trim_preserves_length() {
        let g = path(3);
        let d =
            Decomposition::new(vec![vec![0, 1, 2], vec![0, 1]], vec![None, Some(0)], 0).unwrap();
        let before = d.length_of(&g).unwrap();
        let after = d.trim(&g).unwrap().length_of(&g).unwrap();
        assert!(after.length <= before.length);
    }

    #[test]
    fn separator_check_on_p5() {
        let g = path(5);
        let d = chain_decomp(vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]]);
        for j in 1..4 {
            assert!(d.separator_check(&g, j).unwrap(), "bag {}", j + 1);
        }
        assert!(d.separator_check(&g, 0).is_err());
    }

    #[test]
    fn path_hits_bags_on_p5() {
        let g = path(5);
        let d = chain_decomp(vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]]);
        assert!(d.path_hits_bags(&g, 0, 4).unwrap());
        assert!(d.path_hits_bags(&g, 1, 1).unwrap());
        assert!(d.path_hits_bags(&g, 0, 1).unwrap());
    }

    #[test]
    fn chain_order_follows_root() {
        let d = Decomposition::new(
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            vec![Some(1), Some(2), None],
            2,
        )
        .unwrap();
        assert_eq!(d.kind(), DecompositionKind::Path);
        assert_eq!(d.chain_order().unwrap(), vec![2, 1, 0]);
    }
}
