//! Independence oracles over a ground set of contiguous indices.
//!
//! Every matroid answers `is_independent` for subsets of `{0,..,n-1}`
//! and derives rank by the greedy procedure. Construction kinds: uniform,
//! partition (direct sum of uniforms over explicit blocks), graphic
//! (forests of a multigraph), vectorial (independent columns of an exact
//! integer matrix), direct sums, and restriction views. Oracles are
//! read-only after construction; the memo cache is internally
//! synchronized, so a single oracle can serve concurrent solver workers.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::weights::GroundSet;

#[derive(Clone, Debug)]
pub struct PartitionBlock {
    pub elements: Vec<usize>,
    pub rank: usize,
}

#[derive(Debug)]
pub enum MatroidKind {
    /// All subsets of size at most `rank` are independent.
    Uniform { rank: usize },
    /// Direct sum of uniform matroids over explicit disjoint blocks.
    /// Elements covered by no block are loops.
    Partition {
        blocks: Vec<PartitionBlock>,
        element_block: Vec<Option<usize>>,
    },
    /// Forests of a multigraph; ground elements are edge indices.
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    /// Linearly independent column sets of an exact integer matrix.
    Vectorial { matrix: IntMatrix },
    /// Disjoint union; part `i` occupies the index range starting at `offsets[i]`.
    DirectSum {
        parts: Vec<Arc<Matroid>>,
        offsets: Vec<usize>,
    },
    /// Parent matroid restricted to `retained`; queries outside are rejected.
    Restriction {
        parent: Arc<Matroid>,
        retained: Vec<usize>,
        retained_mask: Vec<bool>,
    },
}

#[derive(Debug)]
pub struct Matroid {
    n: usize,
    kind: MatroidKind,
    elements: Vec<usize>,
    memo: Mutex<HashMap<Vec<usize>, bool>>,
    memo_limit: Option<usize>,
    queries: AtomicU64,
    full_rank: OnceLock<usize>,
}

impl Matroid {
    fn build(n: usize, kind: MatroidKind, elements: Vec<usize>) -> Matroid {
        Matroid {
            n,
            kind,
            elements,
            memo: Mutex::new(HashMap::new()),
            memo_limit: None,
            queries: AtomicU64::new(0),
            full_rank: OnceLock::new(),
        }
    }

    pub fn uniform(rank: usize, n: usize) -> Matroid {
        Matroid::build(n, MatroidKind::Uniform { rank }, (0..n).collect())
    }

    pub fn partition(n: usize, blocks: Vec<(Vec<usize>, usize)>) -> Result<Matroid> {
        let ground = GroundSet::new(n);
        let mut element_block = vec![None; n];
        let mut out = Vec::with_capacity(blocks.len());
        for (idx, (elements, rank)) in blocks.into_iter().enumerate() {
            ground.check_subset(&elements)?;
            let mut sorted = elements;
            sorted.sort_unstable();
            sorted.dedup();
            for &e in &sorted {
                if element_block[e].is_some() {
                    return Err(Error::input(format!(
                        "partition blocks overlap at element {e}"
                    )));
                }
                element_block[e] = Some(idx);
            }
            out.push(PartitionBlock {
                elements: sorted,
                rank,
            });
        }
        Ok(Matroid::build(
            n,
            MatroidKind::Partition {
                blocks: out,
                element_block,
            },
            (0..n).collect(),
        ))
    }

    pub fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Matroid> {
        for &(u, v) in &edges {
            if u >= vertices || v >= vertices {
                return Err(Error::input(format!(
                    "edge ({u},{v}) exceeds vertex count {vertices}"
                )));
            }
        }
        let n = edges.len();
        Ok(Matroid::build(
            n,
            MatroidKind::Graphic { vertices, edges },
            (0..n).collect(),
        ))
    }

    pub fn vectorial(matrix: IntMatrix) -> Matroid {
        let n = matrix.cols();
        Matroid::build(n, MatroidKind::Vectorial { matrix }, (0..n).collect())
    }

    pub fn direct_sum(parts: Vec<Arc<Matroid>>) -> Matroid {
        let mut offsets = Vec::with_capacity(parts.len());
        let mut elements = Vec::new();
        let mut n = 0;
        for part in &parts {
            offsets.push(n);
            elements.extend(part.elements().iter().map(|&e| e + n));
            n += part.ground_size();
        }
        Matroid::build(n, MatroidKind::DirectSum { parts, offsets }, elements)
    }

    pub fn restriction(parent: &Arc<Matroid>, retained: &[usize]) -> Result<Matroid> {
        GroundSet::new(parent.ground_size()).check_subset(retained)?;
        let mut sorted = retained.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut retained_mask = vec![false; parent.ground_size()];
        let parent_active: Vec<bool> = {
            let mut mask = vec![false; parent.ground_size()];
            for &e in parent.elements() {
                mask[e] = true;
            }
            mask
        };
        let elements: Vec<usize> = sorted
            .iter()
            .copied()
            .filter(|&e| parent_active[e])
            .collect();
        for &e in &elements {
            retained_mask[e] = true;
        }
        Ok(Matroid::build(
            parent.ground_size(),
            MatroidKind::Restriction {
                parent: Arc::clone(parent),
                retained: elements.clone(),
                retained_mask,
            },
            elements,
        ))
    }

    /// Rank-`k_i` uniform matroids on `2 k_i` elements, summed. Block `i`
    /// consists of a slice of `{0,..,k-1}` together with its mirror in
    /// `{k,..,2k-1}`, so the ground set has `2k` elements.
    pub fn mrk(r: usize, k: usize, block_sizes: &[usize]) -> Result<Matroid> {
        if block_sizes.len() != r {
            return Err(Error::input(format!(
                "expected {r} block sizes, got {}",
                block_sizes.len()
            )));
        }
        if block_sizes.iter().any(|&s| s == 0) {
            return Err(Error::input("block sizes must be positive"));
        }
        if block_sizes.iter().sum::<usize>() != k {
            return Err(Error::input(format!("block sizes must sum to {k}")));
        }
        let mut blocks = Vec::with_capacity(r);
        let mut start = 0;
        for &size in block_sizes {
            let mut elements: Vec<usize> = (start..start + size).collect();
            elements.extend((start..start + size).map(|j| j + k));
            blocks.push((elements, size));
            start += size;
        }
        Matroid::partition(2 * k, blocks)
    }

    pub fn memo_limit(mut self, limit: Option<usize>) -> Matroid {
        self.memo_limit = limit;
        self
    }

    pub fn kind(&self) -> &MatroidKind {
        &self.kind
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Active elements: the full ground set except for restriction views,
    /// which expose only their retained subset.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Number of independence queries answered so far (cache hits included).
    pub fn query_count(&self) -> u64 {
        self.queries.load(Ordering::Relaxed)
    }

    /// Independence oracle. The input is treated as a set: it is sorted
    /// and deduplicated before dispatch, and memoized under that
    /// canonical key.
    pub fn is_independent(&self, subset: &[usize]) -> Result<bool> {
        let mut canonical = subset.to_vec();
        canonical.sort_unstable();
        canonical.dedup();
        self.check_elements(&canonical)?;
        self.queries.fetch_add(1, Ordering::Relaxed);
        if let Some(&hit) = self.memo.lock().unwrap().get(&canonical) {
            return Ok(hit);
        }
        let answer = self.decide(&canonical)?;
        let mut memo = self.memo.lock().unwrap();
        if self.memo_limit.map_or(true, |cap| memo.len() < cap) {
            memo.insert(canonical, answer);
        }
        Ok(answer)
    }

    fn check_elements(&self, canonical: &[usize]) -> Result<()> {
        GroundSet::new(self.n).check_subset(canonical)?;
        if let MatroidKind::Restriction { retained_mask, .. } = &self.kind {
            if let Some(&bad) = canonical.iter().find(|&&e| !retained_mask[e]) {
                return Err(Error::input(format!(
                    "element {bad} lies outside the restriction"
                )));
            }
        }
        Ok(())
    }

    fn decide(&self, subset: &[usize]) -> Result<bool> {
        match &self.kind {
            MatroidKind::Uniform { rank } => Ok(subset.len() <= *rank),
            MatroidKind::Partition {
                blocks,
                element_block,
            } => {
                let mut counts = vec![0usize; blocks.len()];
                for &e in subset {
                    match element_block[e] {
                        // An element covered by no block is a loop.
                        None => return Ok(false),
                        Some(b) => {
                            counts[b] += 1;
                            if counts[b] > blocks[b].rank {
                                return Ok(false);
                            }
                        }
                    }
                }
                Ok(true)
            }
            MatroidKind::Graphic { vertices, edges } => {
                let mut dsu = DisjointSets::new(*vertices);
                for &e in subset {
                    let (u, v) = edges[e];
                    if !dsu.union(u, v) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            MatroidKind::Vectorial { matrix } => {
                let sub = matrix.column_submatrix(subset);
                Ok(sub.rank() == subset.len())
            }
            MatroidKind::DirectSum { parts, offsets } => {
                for (part, &off) in parts.iter().zip(offsets) {
                    let hi = off + part.ground_size();
                    let local: Vec<usize> = subset
                        .iter()
                        .filter(|&&e| e >= off && e < hi)
                        .map(|&e| e - off)
                        .collect();
                    if !local.is_empty() && !part.is_independent(&local)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            MatroidKind::Restriction { parent, .. } => parent.is_independent(subset),
        }
    }

    /// Rank of `subset` by the greedy procedure: scan the elements in
    /// ascending order, keeping each one whose addition preserves
    /// independence.
    pub fn rank(&self, subset: &[usize]) -> Result<usize> {
        let mut canonical = subset.to_vec();
        canonical.sort_unstable();
        canonical.dedup();
        self.check_elements(&canonical)?;
        let mut independent: Vec<usize> = Vec::new();
        for &j in &canonical {
            independent.push(j);
            if !self.is_independent(&independent)? {
                independent.pop();
            }
        }
        Ok(independent.len())
    }

    /// Rank of the whole (active) ground set, computed once and cached.
    pub fn rank_full(&self) -> Result<usize> {
        if let Some(&r) = self.full_rank.get() {
            return Ok(r);
        }
        let r = self.rank(&self.elements.clone())?;
        Ok(*self.full_rank.get_or_init(|| r))
    }
}

/// Union-find with path halving; `union` returns false when both ends
/// already share a component (adding the edge would close a cycle).
struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(size: usize) -> Self {
        DisjointSets {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Signed vertex-arc incidence matrix of the graph under its given
/// orientation, with one row dropped per connected component so the
/// result has full row rank. Its vectorial matroid equals the graphic
/// matroid of the graph.
pub fn graphic_incidence(vertices: usize, edges: &[(usize, usize)]) -> Result<IntMatrix> {
    for &(u, v) in edges {
        if u >= vertices || v >= vertices {
            return Err(Error::input(format!(
                "edge ({u},{v}) exceeds vertex count {vertices}"
            )));
        }
    }
    let mut dsu = DisjointSets::new(vertices);
    for &(u, v) in edges {
        dsu.union(u, v);
    }
    // Drop the smallest vertex of each component.
    let mut dropped = vec![false; vertices];
    let mut seen_root: HashMap<usize, ()> = HashMap::new();
    for v in 0..vertices {
        let root = dsu.find(v);
        if seen_root.insert(root, ()).is_none() {
            dropped[v] = true;
        }
    }
    let kept: Vec<usize> = (0..vertices).filter(|&v| !dropped[v]).collect();
    let row_of: HashMap<usize, usize> = kept.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut matrix = IntMatrix::zeros(kept.len(), edges.len());
    for (j, &(u, v)) in edges.iter().enumerate() {
        if u == v {
            continue; // self-loop: zero column, dependent singleton
        }
        if let Some(&i) = row_of.get(&u) {
            matrix.set(i, j, crate::exact::Int::from(1));
        }
        if let Some(&i) = row_of.get(&v) {
            matrix.set(i, j, crate::exact::Int::from(-1));
        }
    }
    Ok(matrix)
}

/// True when the graph on `vertices` with all the given edges is connected.
pub fn graph_is_connected(vertices: usize, edges: &[(usize, usize)]) -> bool {
    if vertices <= 1 {
        return true;
    }
    let mut dsu = DisjointSets::new(vertices);
    for &(u, v) in edges {
        if u < vertices && v < vertices {
            dsu.union(u, v);
        }
    }
    let root = dsu.find(0);
    (1..vertices).all(|v| dsu.find(v) == root)
}

/// Edges of the triangle graph, used pervasively in tests and docs.
pub fn triangle_edges() -> Vec<(usize, usize)> {
    vec![(0, 1), (1, 2), (0, 2)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Matroid {
        Matroid::graphic(3, triangle_edges()).unwrap()
    }

    #[test]
    fn uniform_independence() {
        let m = Matroid::uniform(2, 4);
        assert!(m.is_independent(&[0, 1]).unwrap());
        assert!(!m.is_independent(&[0, 1, 2]).unwrap());
        assert!(m.is_independent(&[]).unwrap());
        assert_eq!(m.rank(&[0, 1, 2, 3]).unwrap(), 2);
    }

    #[test]
    fn graphic_triangle_cycle_detected() {
        let m = k3();
        assert!(m.is_independent(&[0, 1]).unwrap());
        assert!(!m.is_independent(&[0, 1, 2]).unwrap());
        assert_eq!(m.rank(&[0, 1, 2]).unwrap(), 2);
    }

    #[test]
    fn partition_respects_block_caps() {
        let m = Matroid::partition(4, vec![(vec![0, 1], 1), (vec![2, 3], 1)]).unwrap();
        assert_eq!(m.rank(&[0, 1]).unwrap(), 1);
        assert!(m.is_independent(&[0, 2]).unwrap());
        assert!(!m.is_independent(&[0, 1]).unwrap());
    }

    #[test]
    fn uncovered_partition_element_is_loop() {
        let m = Matroid::partition(3, vec![(vec![0, 1], 2)]).unwrap();
        assert!(!m.is_independent(&[2]).unwrap());
        assert_eq!(m.rank(&[0, 1, 2]).unwrap(), 2);
    }

    #[test]
    fn vectorial_matches_column_independence() {
        let a = IntMatrix::from_i64_rows(&[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let m = Matroid::vectorial(a);
        assert!(m.is_independent(&[0, 1]).unwrap());
        assert!(m.is_independent(&[0, 2]).unwrap());
        assert!(!m.is_independent(&[0, 1, 2]).unwrap());
    }

    #[test]
    fn direct_sum_offsets_elements() {
        let m = Matroid::direct_sum(vec![
            Arc::new(Matroid::uniform(1, 2)),
            Arc::new(k3()),
        ]);
        assert_eq!(m.ground_size(), 5);
        assert!(m.is_independent(&[0, 2, 3]).unwrap());
        assert!(!m.is_independent(&[0, 1]).unwrap());
        assert!(!m.is_independent(&[2, 3, 4]).unwrap());
        assert_eq!(m.rank_full().unwrap(), 3);
    }

    #[test]
    fn restriction_agrees_with_parent_and_rejects_outside() {
        let parent = Arc::new(k3());
        let r = Matroid::restriction(&parent, &[0, 2]).unwrap();
        assert_eq!(r.elements(), &[0, 2]);
        assert!(r.is_independent(&[0, 2]).unwrap());
        assert!(r.is_independent(&[2]).unwrap());
        assert!(r.is_independent(&[]).unwrap());
        assert!(r.is_independent(&[1]).is_err());
        assert_eq!(r.rank_full().unwrap(), 2);
    }

    #[test]
    fn mrk_small_cases() {
        // r=1: a single uniform block, equal to uniform(2,4) on every query.
        let m = Matroid::mrk(1, 2, &[2]).unwrap();
        let u = Matroid::uniform(2, 4);
        for mask in 0u32..16 {
            let subset: Vec<usize> = (0..4).filter(|&b| mask & (1 << b) != 0).collect();
            assert_eq!(
                m.is_independent(&subset).unwrap(),
                u.is_independent(&subset).unwrap(),
            );
        }
        // Invalid partitions are rejected.
        assert!(Matroid::mrk(2, 2, &[2]).is_err());
        assert!(Matroid::mrk(2, 3, &[1, 1]).is_err());
        assert!(Matroid::mrk(1, 1, &[0]).is_err());
    }

    #[test]
    fn mrk_blocks_pair_with_mirrors() {
        // k=2, blocks [1,1]: blocks are {0,2} and {1,3}, each of rank 1.
        let m = Matroid::mrk(2, 2, &[1, 1]).unwrap();
        assert!(!m.is_independent(&[0, 2]).unwrap());
        assert!(!m.is_independent(&[1, 3]).unwrap());
        assert!(m.is_independent(&[0, 1]).unwrap());
        assert!(m.is_independent(&[2, 3]).unwrap());
        assert_eq!(m.rank_full().unwrap(), 2);
    }

    #[test]
    fn memoized_answers_match_fresh_oracle() {
        let warm = k3();
        for _ in 0..2 {
            assert!(!warm.is_independent(&[0, 1, 2]).unwrap());
        }
        let fresh = k3();
        assert_eq!(
            warm.is_independent(&[0, 1, 2]).unwrap(),
            fresh.is_independent(&[0, 1, 2]).unwrap()
        );
        // Each call counts as a query, hit or miss.
        assert_eq!(warm.query_count(), 3);
    }

    #[test]
    fn out_of_range_is_input_error() {
        let m = Matroid::uniform(1, 2);
        assert!(matches!(m.is_independent(&[5]), Err(Error::Input(_))));
    }

    #[test]
    fn incidence_matrix_has_full_row_rank() {
        let inc = graphic_incidence(3, &triangle_edges()).unwrap();
        assert_eq!(inc.rows(), 2);
        assert_eq!(inc.rank(), 2);
        // Two components: 4 vertices, one edge pair each.
        let inc2 = graphic_incidence(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(inc2.rows(), 2);
        assert_eq!(inc2.rank(), 2);
    }

    #[test]
    fn connectivity_check() {
        assert!(graph_is_connected(3, &triangle_edges()));
        assert!(!graph_is_connected(4, &[(0, 1), (2, 3)]));
        assert!(graph_is_connected(1, &[]));
    }
}
