//! Seeded instance families: deterministic (graph, decomposition,
//! parameter) triples for property suites and acceptance runs.
//!
//! All randomness comes from ChaCha8 seeded with a caller-supplied u64,
//! so the same (params, seed) pair always yields a bit-identical
//! instance on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomp::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Plain graph constructors shared by generators and tests.
pub mod builders {
    use crate::graph::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Star K_{1,leaves}: center 0, leaves 1..=leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|l| (0, l)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Spider: center 0 with `legs` paths of `leg_len` vertices each.
    pub fn spider(legs: usize, leg_len: usize) -> Graph {
        let n = 1 + legs * leg_len;
        let mut edges = Vec::new();
        for leg in 0..legs {
            let base = 1 + leg * leg_len;
            edges.push((0, base));
            for k in 0..leg_len - 1 {
                edges.push((base + k, base + k + 1));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// n1×n2 grid; vertex (r, c) has id r*n2 + c.
    pub fn grid(n1: usize, n2: usize) -> Graph {
        let mut edges = Vec::new();
        for r in 0..n1 {
            for c in 0..n2 {
                let v = r * n2 + c;
                if c + 1 < n2 {
                    edges.push((v, v + 1));
                }
                if r + 1 < n1 {
                    edges.push((v, v + n2));
                }
            }
        }
        Graph::from_edges(n1 * n2, &edges).unwrap()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Spider,
    Grid,
    RandomMinDegree,
    Interval,
    KtreeChordal,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Spider => "spider",
            Family::Grid => "grid",
            Family::RandomMinDegree => "random_min_degree",
            Family::Interval => "interval",
            Family::KtreeChordal => "ktree_chordal",
        }
    }
}

/// A generated graph, its decomposition when the family carries one, and
/// the parameters it was built from.
#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub graph: Graph,
    pub decomposition: Option<Decomposition>,
    pub family: Family,
    pub params: Vec<usize>,
    pub seed: u64,
}

fn chain_parents(count: usize) -> Vec<Option<usize>> {
    (0..count)
        .map(|i| if i == 0 { None } else { Some(i - 1) })
        .collect()
}

/// P_n with bags of adjacent pairs (path-length 1).
pub fn gen_path(n: usize) -> Result<GeneratedInstance> {
    if n == 0 {
        return Err(Error::InvalidInput("path needs n >= 1".into()));
    }
    let graph = builders::path(n);
    let bags: Vec<Vec<usize>> = if n == 1 {
        vec![vec![0]]
    } else {
        (0..n - 1).map(|i| vec![i, i + 1]).collect()
    };
    let count = bags.len();
    let decomposition = Some(Decomposition::new(bags, chain_parents(count), 0)?);
    Ok(GeneratedInstance {
        graph,
        decomposition,
        family: Family::Path,
        params: vec![n],
        seed: 0,
    })
}

/// C_n; carries no decomposition.
pub fn gen_cycle(n: usize) -> Result<GeneratedInstance> {
    if n < 3 {
        return Err(Error::InvalidInput("cycle needs n >= 3".into()));
    }
    Ok(GeneratedInstance {
        graph: builders::cycle(n),
        decomposition: None,
        family: Family::Cycle,
        params: vec![n],
        seed: 0,
    })
}

/// K_{1,leaves} with the star tree decomposition (tree-length 1): bag
/// {0, l} per leaf, all attached to the first bag.
pub fn gen_star(leaves: usize) -> Result<GeneratedInstance> {
    if leaves == 0 {
        return Err(Error::InvalidInput("star needs at least one leaf".into()));
    }
    let graph = builders::star(leaves);
    let bags: Vec<Vec<usize>> = (1..=leaves).map(|l| vec![0, l]).collect();
    let parent = (0..leaves)
        .map(|i| if i == 0 { None } else { Some(0) })
        .collect();
    let decomposition = Some(Decomposition::new(bags, parent, 0)?);
    Ok(GeneratedInstance {
        graph,
        decomposition,
        family: Family::Star,
        params: vec![leaves],
        seed: 0,
    })
}

/// Spider with the edge-bag tree decomposition (tree-length 1).
pub fn gen_spider(legs: usize, leg_len: usize) -> Result<GeneratedInstance> {
    if legs == 0 || leg_len == 0 {
        return Err(Error::InvalidInput(
            "spider needs legs >= 1, leg_len >= 1".into(),
        ));
    }
    let graph = builders::spider(legs, leg_len);
    // one bag per tree edge; the bag of a vertex v > 0 is {parent(v), v}
    let mut bags = Vec::new();
    let mut parent = Vec::new();
    for leg in 0..legs {
        let base = 1 + leg * leg_len;
        for k in 0..leg_len {
            let v = base + k;
            let tree_parent = if k == 0 { 0 } else { v - 1 };
            bags.push(vec![tree_parent, v]);
            let bag_idx = bags.len() - 1;
            if bag_idx == 0 {
                parent.push(None);
            } else if k == 0 {
                parent.push(Some(0)); // leg-start bags hang off the first bag
            } else {
                parent.push(Some(bag_idx - 1));
            }
        }
    }
    let decomposition = Some(Decomposition::new(bags, parent, 0)?);
    Ok(GeneratedInstance {
        graph,
        decomposition,
        family: Family::Spider,
        params: vec![legs, leg_len],
        seed: 0,
    })
}

/// Grid with the column-pair path decomposition.
pub fn gen_grid(n1: usize, n2: usize) -> Result<GeneratedInstance> {
    let (graph, decomposition) = crate::pathlen::grid_decomposition(n1, n2)?;
    Ok(GeneratedInstance {
        graph,
        decomposition: Some(decomposition),
        family: Family::Grid,
        params: vec![n1, n2],
        seed: 0,
    })
}

/// Connected graph with minimum degree >= delta: a random spanning tree
/// plus random edges to deficient vertices.
pub fn gen_random_min_degree(n: usize, delta: usize, seed: u64) -> Result<GeneratedInstance> {
    if n == 0 || delta >= n {
        return Err(Error::InvalidInput(
            "random_min_degree needs 0 < n and delta < n".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    let add =
        |edges: &mut Vec<(usize, usize)>, adjacency: &mut Vec<Vec<usize>>, u: usize, v: usize| {
            edges.push((u.min(v), u.max(v)));
            adjacency[u].push(v);
            adjacency[v].push(u);
        };
    // random spanning tree: each vertex attaches to a random earlier one
    for v in 1..n {
        let u = rng.gen_range(0..v);
        add(&mut edges, &mut adjacency, u, v);
    }
    loop {
        let deficient = (0..n).find(|&v| adjacency[v].len() < delta);
        let Some(v) = deficient else { break };
        let candidates: Vec<usize> = (0..n)
            .filter(|&w| w != v && !adjacency[v].contains(&w))
            .collect();
        let &w = candidates
            .choose(&mut rng)
            .expect("delta < n leaves a non-neighbor");
        add(&mut edges, &mut adjacency, v, w);
    }
    edges.sort_unstable();
    let graph = Graph::from_edges(n, &edges)?;
    Ok(GeneratedInstance {
        graph,
        decomposition: None,
        family: Family::RandomMinDegree,
        params: vec![n, delta],
        seed,
    })
}

/// Random interval intersection graph, restricted to its largest
/// connected component, with the sweep path decomposition: one bag per
/// interval start holding every interval alive at that point. Bags are
/// cliques, so the decomposition has length <= 1.
pub fn gen_interval(n: usize, max_coord: usize, seed: u64) -> Result<GeneratedInstance> {
    if n == 0 {
        return Err(Error::InvalidInput("interval needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut intervals: Vec<(usize, usize)> = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..=max_coord);
            let b = rng.gen_range(0..=max_coord);
            (a.min(b), a.max(b))
        })
        .collect();

    // closed-interval intersection graph over all samples
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a1, b1) = intervals[i];
            let (a2, b2) = intervals[j];
            if a1.max(a2) <= b1.min(b2) {
                edges.push((i, j));
            }
        }
    }
    let full = Graph::from_edges(n, &edges)?;

    // keep the largest component (ties: the one with the lowest vertex)
    let mut component = vec![usize::MAX; n];
    let mut comp_count = 0;
    for v in 0..n {
        if component[v] == usize::MAX {
            let o = full.bfs(v)?;
            for (w, c) in component.iter_mut().enumerate() {
                if o.distance(w).is_some() && *c == usize::MAX {
                    *c = comp_count;
                }
            }
            comp_count += 1;
        }
    }
    let sizes: Vec<usize> = (0..comp_count)
        .map(|c| component.iter().filter(|&&x| x == c).count())
        .collect();
    let best = (0..comp_count)
        .max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)))
        .unwrap();
    let keep: Vec<usize> = (0..n).filter(|&v| component[v] == best).collect();
    let remap: Vec<Option<usize>> = {
        let mut m = vec![None; n];
        for (new, &old) in keep.iter().enumerate() {
            m[old] = Some(new);
        }
        m
    };
    let kept_edges: Vec<(usize, usize)> = edges
        .iter()
        .filter_map(|&(u, v)| Some((remap[u]?, remap[v]?)))
        .collect();
    let graph = Graph::from_edges(keep.len(), &kept_edges)?;
    intervals = keep.iter().map(|&old| intervals[old]).collect();

    // sweep: order intervals by (start, id); the bag for interval i
    // holds every interval alive at i's start point
    let m = intervals.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (intervals[i].0, i));
    let bags: Vec<Vec<usize>> = order
        .iter()
        .map(|&i| {
            let point = intervals[i].0;
            (0..m)
                .filter(|&j| intervals[j].0 <= point && point <= intervals[j].1)
                .collect()
        })
        .collect();
    let count = bags.len();
    let decomposition = Some(Decomposition::new(bags, chain_parents(count), 0)?);
    Ok(GeneratedInstance {
        graph,
        decomposition,
        family: Family::Interval,
        params: vec![n, max_coord],
        seed,
    })
}

/// Random k-tree: start from K_{k+1}; each new vertex joins a random
/// k-clique taken from an existing bag. Chordal, and the (k+1)-clique
/// bags form a tree decomposition of length 1.
pub fn gen_ktree_chordal(n: usize, k: usize, seed: u64) -> Result<GeneratedInstance> {
    if k == 0 || n <= k {
        return Err(Error::InvalidInput("ktree needs n > k >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    let mut bags: Vec<Vec<usize>> = vec![(0..=k).collect()];
    let mut parent: Vec<Option<usize>> = vec![None];
    for v in k + 1..n {
        let host = rng.gen_range(0..bags.len());
        let drop = rng.gen_range(0..bags[host].len());
        let mut clique: Vec<usize> = bags[host].clone();
        clique.remove(drop);
        for &u in &clique {
            edges.push((u, v));
        }
        clique.push(v);
        clique.sort_unstable();
        bags.push(clique);
        parent.push(Some(host));
    }
    edges.sort_unstable();
    let graph = Graph::from_edges(n, &edges)?;
    let decomposition = Some(Decomposition::new(bags, parent, 0)?);
    Ok(GeneratedInstance {
        graph,
        decomposition,
        family: Family::KtreeChordal,
        params: vec![n, k],
        seed,
    })
}
