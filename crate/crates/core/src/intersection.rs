//! Maximum-cardinality common independent set of two matroids.
//!
//! Classical exchange-graph augmentation: starting from the empty set,
//! repeatedly find a shortest source-to-sink path in the exchange graph
//! and flip it. Sources are elements addable under the first matroid,
//! sinks addable under the second; interior arcs are the single-element
//! swaps each matroid permits. Shortest paths (BFS order, smallest
//! element index on ties) keep the output deterministic.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Input pair; both oracles must share the ground-set size.
pub struct IntersectionInstance<'a> {
    pub first: &'a Matroid,
    pub second: &'a Matroid,
}

impl<'a> IntersectionInstance<'a> {
    pub fn new(first: &'a Matroid, second: &'a Matroid) -> Result<Self> {
        if first.ground_size() != second.ground_size() {
            return Err(Error::input(format!(
                "intersection oracles disagree on ground size: {} vs {}",
                first.ground_size(),
                second.ground_size()
            )));
        }
        Ok(IntersectionInstance { first, second })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntersectionStats {
    pub augmentations: u64,
    pub oracle_queries: u64,
}

pub struct IntersectionOutcome {
    pub set: Vec<usize>,
    pub stats: IntersectionStats,
}

/// Exchange graph of the current common independent set, rebuilt per
/// augmentation phase.
struct ExchangeGraph {
    /// Elements currently selected.
    members: Vec<usize>,
    /// Candidates outside the set.
    outside: Vec<usize>,
    /// Sources: outside elements addable under the first matroid.
    sources: Vec<usize>,
    /// Sinks: outside elements addable under the second matroid.
    sinks: Vec<usize>,
    /// Arcs x -> y (x in S, y outside) with S - x + y independent in the
    /// first matroid, and y -> x with S - x + y independent in the second.
    first_swap: Vec<(usize, usize)>,
    second_swap: Vec<(usize, usize)>,
}

impl ExchangeGraph {
    fn build(
        first: &Matroid,
        second: &Matroid,
        current: &BTreeSet<usize>,
        elems: &[usize],
    ) -> Result<ExchangeGraph> {
        let members: Vec<usize> = current.iter().copied().collect();
        let outside: Vec<usize> = elems.iter().copied().filter(|e| !current.contains(e)).collect();
        let mut sources = Vec::new();
        let mut sinks = Vec::new();
        for &y in &outside {
            let mut grown = members.clone();
            grown.push(y);
            if first.is_independent(&grown)? {
                sources.push(y);
            }
            if second.is_independent(&grown)? {
                sinks.push(y);
            }
        }
        let mut first_swap = Vec::new();
        let mut second_swap = Vec::new();
        for &x in &members {
            let without: Vec<usize> = members.iter().copied().filter(|&e| e != x).collect();
            for &y in &outside {
                let mut swapped = without.clone();
                swapped.push(y);
                if first.is_independent(&swapped)? {
                    first_swap.push((x, y));
                }
                if second.is_independent(&swapped)? {
                    second_swap.push((y, x));
                }
            }
        }
        Ok(ExchangeGraph {
            members,
            outside,
            sources,
            sinks,
            first_swap,
            second_swap,
        })
    }

    /// Shortest source-to-sink path, ties broken toward smaller element
    /// indices; `None` when no sink is reachable.
    fn shortest_augmenting_path(&self, ground: usize) -> Option<Vec<usize>> {
        if self.sources.is_empty() || self.sinks.is_empty() {
            return None;
        }
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); ground];
        // Outgoing arcs: members move via first-matroid swaps (x -> y),
        // outside elements via second-matroid swaps (y -> x).
        for &(x, y) in &self.first_swap {
            adjacency[x].push(y);
        }
        for &(y, x) in &self.second_swap {
            adjacency[y].push(x);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let mut dist: Vec<Option<u32>> = vec![None; ground];
        let mut parent: Vec<Option<usize>> = vec![None; ground];
        let mut queue = VecDeque::new();
        for &s in &self.sources {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(dist[v].unwrap() + 1);
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        let best = self
            .sinks
            .iter()
            .filter_map(|&t| dist[t].map(|d| (d, t)))
            .min()?;
        let mut path = vec![best.1];
        while let Some(prev) = parent[path[path.len() - 1]] {
            path.push(prev);
        }
        path.reverse();
        Some(path)
    }

    fn query_load(&self) -> usize {
        // Bookkeeping only; actual counts come from the oracles.
        self.members.len() + self.outside.len()
    }
}

/// Maximum-cardinality set independent in both matroids. Deterministic:
/// augmenting paths are shortest, with lowest-index tie-breaking.
pub fn max_common_independent(first: &Matroid, second: &Matroid) -> Result<IntersectionOutcome> {
    let instance = IntersectionInstance::new(first, second)?;
    let (first, second) = (instance.first, instance.second);
    let queries_before = query_total(first, second);
    let elems: Vec<usize> = {
        let b: BTreeSet<usize> = second.elements().iter().copied().collect();
        first
            .elements()
            .iter()
            .copied()
            .filter(|e| b.contains(e))
            .collect()
    };
    let ground = first.ground_size();
    let mut current: BTreeSet<usize> = BTreeSet::new();
    let mut augmentations = 0u64;
    loop {
        let graph = ExchangeGraph::build(first, second, &current, &elems)?;
        let _ = graph.query_load();
        let Some(path) = graph.shortest_augmenting_path(ground) else {
            break;
        };
        for v in path {
            if !current.remove(&v) {
                current.insert(v);
            }
        }
        augmentations += 1;
        let snapshot: Vec<usize> = current.iter().copied().collect();
        if !(first.is_independent(&snapshot)? && second.is_independent(&snapshot)?) {
            return Err(Error::internal(
                "matroid intersection: augmented set is not commonly independent \
                 (oracle answers are not downward closed)",
            ));
        }
    }
    let set: Vec<usize> = current.into_iter().collect();
    Ok(IntersectionOutcome {
        set,
        stats: IntersectionStats {
            augmentations,
            oracle_queries: query_total(first, second) - queries_before,
        },
    })
}

fn query_total(first: &Matroid, second: &Matroid) -> u64 {
    if std::ptr::eq(first, second) {
        first.query_count()
    } else {
        first.query_count() + second.query_count()
    }
}
