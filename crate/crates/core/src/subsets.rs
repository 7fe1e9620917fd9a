//! Exhaustive walk over all edge subsets of a host graph.
//!
//! Subsets are indexed by a bitmask over the host's canonical edge list. The
//! high bits select a chunk, the low bits are walked in reflected Gray-code
//! order so that consecutive subsets differ by one edge and vertex degrees
//! update in O(1). Chunks run in parallel; results come back in chunk order,
//! so merges are deterministic regardless of worker count.

use rayon::prelude::*;

/// Receives slot moves and subset visits during a walk.
///
/// Every vertex occupies one slot `base[v] + deg(v)` of a flat enumerator
/// vector; adding or removing an incident edge moves it one slot.
pub(crate) trait SubsetVisitor: Send {
    fn shift(&mut self, from: usize, to: usize);
    /// `order` is the global visiting position, `mask` the subset itself.
    fn visit(&mut self, order: u64, mask: u64);
}

/// Endpoints are vertex indices into `base`; vertex `v` starts in slot `base[v]`.
pub(crate) struct WalkPlan<'a> {
    pub endpoints: &'a [(usize, usize)],
    pub base: &'a [usize],
}

const MAX_LOW_BITS: usize = 16;
const MAX_HIGH_BITS: usize = 12;

impl WalkPlan<'_> {
    pub fn walk<V, F>(&self, make: F) -> Vec<V>
    where
        V: SubsetVisitor,
        F: Fn() -> V + Sync,
    {
        let edges = self.endpoints.len();
        assert!(edges < 64, "subset masks are 64-bit");
        let high = edges.saturating_sub(MAX_LOW_BITS).min(MAX_HIGH_BITS);
        let low = edges - high;
        (0..1u64 << high)
            .into_par_iter()
            .map(|chunk| self.walk_chunk(chunk, low, make()))
            .collect()
    }

    fn walk_chunk<V: SubsetVisitor>(&self, chunk: u64, low: usize, mut visitor: V) -> V {
        let mut deg = vec![0usize; self.base.len()];
        let toggle = |deg: &mut [usize], visitor: &mut V, edge: usize, add: bool| {
            let (a, b) = self.endpoints[edge];
            for v in [a, b] {
                let from = self.base[v] + deg[v];
                if add {
                    deg[v] += 1;
                } else {
                    deg[v] -= 1;
                }
                visitor.shift(from, self.base[v] + deg[v]);
            }
        };
        let high_mask = chunk << low;
        for edge in low..self.endpoints.len() {
            if high_mask >> edge & 1 == 1 {
                toggle(&mut deg, &mut visitor, edge, true);
            }
        }
        let start = chunk << low;
        visitor.visit(start, high_mask);
        let mut gray = 0u64;
        for t in 1..1u64 << low {
            let edge = t.trailing_zeros() as usize;
            gray ^= 1 << edge;
            toggle(&mut deg, &mut visitor, edge, gray >> edge & 1 == 1);
            visitor.visit(start | t, high_mask | gray);
        }
        visitor
    }
}
