//! Pulling triangulations from incidence data alone.
//!
//! A face is a set of vertex indices. Its facets are the inclusion-maximal
//! proper nonempty intersections with the facets of the polytope. A face of
//! dimension `d` is triangulated by picking an apex vertex and coning it
//! over the triangulations of the facets that miss the apex. Because the
//! apex rule depends only on the face, every face is triangulated the same
//! way wherever it is reached, so the pieces glue into a triangulation.

use crate::bitset::BitSet;

/// Which vertex of a face is used as the cone apex. Vertices are indexed in
/// lexicographic order, so these are the lexicographically smallest and
/// largest vertices of the face.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Apex {
    #[default]
    LexMin,
    LexMax,
}

impl Apex {
    fn pick(self, face: &BitSet) -> usize {
        match self {
            Apex::LexMin => face.first(),
            Apex::LexMax => face.last(),
        }
        .expect("faces are nonempty")
    }
}

/// Facets of `face`, given the facets of the ambient polytope.
pub(crate) fn facets_of(face: &BitSet, facets: &[BitSet]) -> Vec<BitSet> {
    let mut cands: Vec<BitSet> = facets
        .iter()
        .map(|g| face.intersection(g))
        .filter(|s| !s.is_empty() && s != face)
        .collect();
    cands.sort();
    cands.dedup();
    let maximal: Vec<bool> = cands
        .iter()
        .map(|s| !cands.iter().any(|t| t != s && s.is_subset(t)))
        .collect();
    cands
        .into_iter()
        .zip(maximal)
        .filter_map(|(s, keep)| keep.then_some(s))
        .collect()
}

/// Calls `emit` with the `dim + 1` vertex indices of every simplex in the
/// pulling triangulation of a face of dimension `dim`.
pub(crate) fn walk_face(
    face: &BitSet,
    dim: usize,
    facets: &[BitSet],
    apex: Apex,
    emit: &mut dyn FnMut(&[usize]),
) {
    let mut stack = Vec::with_capacity(dim + 1);
    walk(face, dim, facets, apex, &mut stack, emit);
}

fn walk(
    face: &BitSet,
    dim: usize,
    facets: &[BitSet],
    apex: Apex,
    stack: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let a = apex.pick(face);
    stack.push(a);
    if dim == 0 {
        emit(stack);
    } else {
        for sub in facets_of(face, facets) {
            if !sub.contains(a) {
                walk(&sub, dim - 1, facets, apex, stack, emit);
            }
        }
    }
    stack.pop();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(face: &BitSet, dim: usize, facets: &[BitSet], apex: Apex) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        walk_face(face, dim, facets, apex, &mut |s| out.push(s.to_vec()));
        out
    }

    #[test]
    fn square_splits_in_two() {
        // Vertices 0:(-1,-1) 1:(-1,1) 2:(1,-1) 3:(1,1).
        let facets = [
            BitSet::from_indices(4, [0, 1]),
            BitSet::from_indices(4, [2, 3]),
            BitSet::from_indices(4, [0, 2]),
            BitSet::from_indices(4, [1, 3]),
        ];
        let all = BitSet::full(4);
        let mut tris = collect(&all, 2, &facets, Apex::LexMin);
        tris.sort();
        assert_eq!(tris, vec![vec![0, 1, 3], vec![0, 2, 3]]);
        assert_eq!(collect(&all, 2, &facets, Apex::LexMax).len(), 2);
    }

    #[test]
    fn facets_of_an_edge_are_its_endpoints() {
        let facets = [
            BitSet::from_indices(3, [0, 1]),
            BitSet::from_indices(3, [1, 2]),
            BitSet::from_indices(3, [0, 2]),
        ];
        let edge = BitSet::from_indices(3, [0, 1]);
        let f = facets_of(&edge, &facets);
        assert_eq!(f, vec![BitSet::from_indices(3, [0]), BitSet::from_indices(3, [1])]);
    }
}
