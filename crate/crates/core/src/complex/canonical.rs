//! Canonical labelling of small complexes.
//!
//! The label is the lexicographically least sorted facet-mask list over all
//! relabellings compatible with an iterated vertex-invariant refinement.
//! Vertices are individualized one cell at a time; branches through a vertex
//! that is a twin of an already explored one (the transposition is an
//! automorphism) are skipped since they produce the same encodings.

use std::collections::HashSet;

use super::VertexSet;

/// Isomorphism-complete label: equal iff the complexes differ by a
/// permutation of the ground set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn encode(n: usize, masks: &[u64]) -> Self {
        let mut bytes = Vec::with_capacity(3 + 2 * masks.len());
        bytes.push(n as u8);
        bytes.extend_from_slice(&(masks.len() as u16).to_le_bytes());
        for m in masks {
            bytes.extend_from_slice(&(*m as u16).to_le_bytes());
        }
        CanonicalForm(bytes)
    }
}

struct Search<'a> {
    n: usize,
    facets: &'a [u64],
    facet_set: HashSet<u64>,
    containing: Vec<Vec<usize>>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn rank(signatures: Vec<(u32, Vec<Vec<u32>>)>) -> Vec<u32> {
        let mut distinct: Vec<_> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        signatures.iter().map(|s| distinct.binary_search(&s).expect("present") as u32).collect()
    }

    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut classes = count_distinct(&colors);
        loop {
            let signatures: Vec<_> = (0..self.n)
                .map(|v| {
                    let mut around: Vec<Vec<u32>> = self.containing[v]
                        .iter()
                        .map(|&fi| {
                            let mut c: Vec<u32> =
                                VertexSet(self.facets[fi]).iter().filter(|&w| w != v).map(|w| colors[w]).collect();
                            c.sort_unstable();
                            c
                        })
                        .collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect();
            colors = Self::rank(signatures);
            let now = count_distinct(&colors);
            if now == classes {
                return colors;
            }
            classes = now;
        }
    }

    fn swapped_is_automorphism(&self, v: usize, w: usize) -> bool {
        let pair = (1u64 << v) | (1u64 << w);
        self.facets.iter().all(|&f| {
            let hit = f & pair;
            if hit == 0 || hit == pair {
                true
            } else {
                self.facet_set.contains(&(f ^ pair))
            }
        })
    }

    fn explore(&mut self, colors: Vec<u32>) {
        let mut cell_sizes = vec![0usize; self.n];
        for &c in &colors {
            cell_sizes[c as usize] += 1;
        }
        let Some(target) = (0..self.n).find(|&c| cell_sizes[c] > 1) else {
            self.leaf(&colors);
            return;
        };
        let cell: Vec<usize> = (0..self.n).filter(|&v| colors[v] as usize == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if explored.iter().any(|&u| self.swapped_is_automorphism(u, v)) {
                continue;
            }
            explored.push(v);
            let signatures = (0..self.n)
                .map(|w| {
                    let demoted = colors[w] as usize == target && w != v;
                    (colors[w], vec![vec![demoted as u32]])
                })
                .collect();
            let split = Self::rank(signatures);
            let refined = self.refine(split);
            self.explore(refined);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut masks: Vec<u64> = self.facets.iter().map(|&f| VertexSet(f).map(&perm).bits()).collect();
        masks.sort_unstable();
        let better = match &self.best {
            None => true,
            Some((best, _)) => masks < *best,
        };
        if better {
            self.best = Some((masks, perm));
        }
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

pub(super) fn canonical_labeling(n: usize, facets: &[VertexSet]) -> (CanonicalForm, Vec<usize>) {
    let masks: Vec<u64> = facets.iter().map(|f| f.bits()).collect();
    let mut containing = vec![Vec::new(); n];
    for (i, f) in facets.iter().enumerate() {
        for v in f.iter() {
            containing[v].push(i);
        }
    }
    let mut search = Search { n, facets: &masks, facet_set: masks.iter().copied().collect(), containing, best: None };
    let start = search.refine(vec![0; n]);
    search.explore(start);
    let (best, perm) = search.best.expect("at least one leaf");
    (CanonicalForm::encode(n, &best), perm)
}
