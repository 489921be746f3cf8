use std::collections::HashMap;

use super::{SimplicialComplex, VertexSet};

/// `K = K_l ∪ K_m` with `K_l ∩ K_m` the simplex `tau`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Wedge {
    pub l: VertexSet,
    pub m: VertexSet,
    pub tau: VertexSet,
}

impl SimplicialComplex {
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == self.vertices()
    }

    /// Non-faces all of whose proper subsets are faces.
    pub fn minimal_non_faces(&self) -> Vec<VertexSet> {
        self.vertices()
            .subsets()
            .filter(|&s| !self.is_face(s) && s.iter().all(|v| self.is_face(s.without(v))))
            .collect()
    }

    /// A minimal non-face with three or more vertices, if any.
    pub fn flag_witness(&self) -> Option<VertexSet> {
        self.minimal_non_faces().into_iter().find(|s| s.len() > 2)
    }

    pub fn is_flag(&self) -> bool {
        self.flag_witness().is_none()
    }

    fn neighbours(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.m];
        for (a, b) in self.edges() {
            adj[a] = adj[a].with(b);
            adj[b] = adj[b].with(a);
        }
        adj
    }

    /// A perfect elimination ordering of the 1-skeleton, found by maximum
    /// cardinality search and then verified; `None` if the graph is not chordal.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let adj = self.neighbours();
        let mut weight = vec![0usize; self.m];
        let mut numbered = VertexSet::EMPTY;
        let mut visit = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            let v = (0..self.m)
                .filter(|&v| !numbered.contains(v))
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unvisited vertex remains");
            visit.push(v);
            numbered = numbered.with(v);
            for u in adj[v].minus(numbered).iter() {
                weight[u] += 1;
            }
        }
        visit.reverse();
        let mut later = VertexSet::full(self.m);
        for &v in &visit {
            later = later.without(v);
            let nb = adj[v].intersection(later);
            for a in nb.iter() {
                if !nb.without(a).is_subset(adj[a]) {
                    return None;
                }
            }
        }
        Some(visit)
    }

    pub fn is_chordal_skeleton(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// Searches nonempty simplices `tau` (other than the whole complex) and
    /// splits of the remaining vertices into two nonempty sides with no face
    /// meeting both. Such a split exists iff the 1-skeleton on the
    /// remaining vertices is disconnected.
    pub fn wedge_decomposition(&self) -> Option<Wedge> {
        if self.is_simplex() {
            return None;
        }
        let adj = self.neighbours();
        for tau in self.faces() {
            if tau.is_empty() {
                continue;
            }
            let rest = self.vertices().minus(tau);
            let Some(start) = rest.min() else {
                continue;
            };
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(adj[v]);
                }
                next = next.intersection(rest).minus(comp);
                comp = comp.union(next);
                frontier = next;
            }
            if comp != rest {
                return Some(Wedge {
                    l: comp.union(tau),
                    m: rest.minus(comp).union(tau),
                    tau,
                });
            }
        }
        None
    }

    pub fn is_wedge_decomposable(&self) -> bool {
        self.wedge_decomposition().is_some()
    }
}

/// Whether `k` can be built from a simplex by repeatedly gluing a simplex
/// along a (possibly empty) face. Searches backwards: the last glued simplex
/// is a facet `F` with a nonempty set `P` of vertices lying in no other
/// facet, and removing `P` leaves the full subcomplex on the other vertices.
pub fn reachable_by_attachment(k: &SimplicialComplex) -> bool {
    let mut memo = HashMap::new();
    reachable_on(k, k.vertices(), &mut memo)
}

fn reachable_on(k: &SimplicialComplex, w: VertexSet, memo: &mut HashMap<VertexSet, bool>) -> bool {
    if k.is_face(w) {
        return true;
    }
    if let Some(&r) = memo.get(&w) {
        return r;
    }
    let facets: Vec<VertexSet> = maximal_faces_within(k, w);
    let mut found = false;
    'outer: for (idx, &f) in facets.iter().enumerate() {
        let mut others = VertexSet::EMPTY;
        for (j, &g) in facets.iter().enumerate() {
            if j != idx {
                others = others.union(g);
            }
        }
        let private = f.minus(others);
        for p in private.subsets() {
            if p.is_empty() || p == w {
                continue;
            }
            if reachable_on(k, w.minus(p), memo) {
                found = true;
                break 'outer;
            }
        }
    }
    memo.insert(w, found);
    found
}

fn maximal_faces_within(k: &SimplicialComplex, w: VertexSet) -> Vec<VertexSet> {
    let faces = k.faces_within(w);
    faces
        .iter()
        .copied()
        .filter(|&f| w.minus(f).iter().all(|v| !k.is_face(f.with(v))))
        .collect()
}
