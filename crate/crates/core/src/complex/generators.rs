use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ComplexError, SimplicialComplex, VertexSet, MAX_VERTICES};

fn build(m: usize, faces: &[&[usize]]) -> SimplicialComplex {
    let faces = faces
        .iter()
        .map(|f| f.iter().map(|v| v - 1).collect::<VertexSet>());
    SimplicialComplex::from_maximal_faces(m, faces).expect("built-in complex is valid")
}

/// The full simplex on `m` vertices.
pub fn simplex(m: usize) -> SimplicialComplex {
    SimplicialComplex::from_maximal_faces(m, [VertexSet::full(m)]).expect("m within cap")
}

/// The boundary of the simplex on `m >= 2` vertices.
pub fn boundary_simplex(m: usize) -> SimplicialComplex {
    assert!(m >= 2, "the boundary of a point has a ghost vertex");
    let full = VertexSet::full(m);
    SimplicialComplex::from_maximal_faces(m, (0..m).map(|i| full.without(i))).expect("m within cap")
}

/// The cycle `1 - 2 - ... - m - 1`, `m >= 3`.
pub fn cycle(m: usize) -> SimplicialComplex {
    assert!(m >= 3, "a cycle needs at least three vertices");
    SimplicialComplex::from_maximal_faces(m, (0..m).map(|i| VertexSet::from_iter([i, (i + 1) % m])))
        .expect("m within cap")
}

pub fn disjoint_points(m: usize) -> SimplicialComplex {
    SimplicialComplex::from_maximal_faces(m, (0..m).map(VertexSet::singleton))
        .expect("m within cap")
}

/// The 6-vertex triangulation of the real projective plane.
pub fn rp2_minimal() -> SimplicialComplex {
    build(
        6,
        &[
            &[1, 2, 3],
            &[1, 2, 5],
            &[1, 3, 6],
            &[1, 4, 5],
            &[1, 4, 6],
            &[2, 3, 4],
            &[2, 4, 6],
            &[2, 5, 6],
            &[3, 4, 5],
            &[3, 5, 6],
        ],
    )
}

/// The square `1 2 3 4` with a pendant edge `4 5`.
pub fn square_edge() -> SimplicialComplex {
    build(5, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4], &[4, 5]])
}

/// Two hollow triangles `1 2 5` and `3 4 5` sharing the vertex 5.
pub fn two_triangles() -> SimplicialComplex {
    build(5, &[&[1, 2], &[2, 5], &[1, 5], &[3, 4], &[4, 5], &[3, 5]])
}

/// Squares `1 2 3 4` and `3 4 5 6` sharing the edge `3 4`.
pub fn two_squares() -> SimplicialComplex {
    build(
        6,
        &[
            &[1, 2],
            &[2, 3],
            &[3, 4],
            &[1, 4],
            &[4, 5],
            &[5, 6],
            &[3, 6],
        ],
    )
}

/// The `m`-cycle with the triangle `1 2 3` filled in.
pub fn cycle_with_filled_triangle(m: usize) -> SimplicialComplex {
    let c = cycle(m);
    let faces = c
        .facets()
        .iter()
        .copied()
        .chain([VertexSet::from_iter([0, 1, 2])]);
    SimplicialComplex::from_maximal_faces(m, faces).expect("m within cap")
}

/// The clique complex of a graph on `[m]` (0-based edges).
pub fn flag_complex(m: usize, edges: &[(usize, usize)]) -> SimplicialComplex {
    let mut adj = vec![VertexSet::EMPTY; m];
    for &(a, b) in edges {
        adj[a] = adj[a].with(b);
        adj[b] = adj[b].with(a);
    }
    let cliques = VertexSet::full(m)
        .subsets()
        .filter(|s| s.iter().all(|v| s.without(v).is_subset(adj[v])));
    SimplicialComplex::from_maximal_faces(m, cliques).expect("cliques cover every vertex")
}

#[derive(Clone, Debug)]
pub struct ZooEntry {
    pub name: String,
    pub complex: SimplicialComplex,
}

/// The named complexes used throughout the test suites.
pub fn zoo() -> Vec<ZooEntry> {
    let mut z = Vec::new();
    let mut push = |name: String, complex| z.push(ZooEntry { name, complex });
    for m in 1..=4 {
        push(format!("simplex:{m}"), simplex(m));
    }
    for m in 2..=5 {
        push(format!("boundary:{m}"), boundary_simplex(m));
    }
    for m in 3..=7 {
        push(format!("cycle:{m}"), cycle(m));
    }
    for m in 2..=5 {
        push(format!("points:{m}"), disjoint_points(m));
    }
    push("rp2".into(), rp2_minimal());
    push("square-edge".into(), square_edge());
    push("two-triangles".into(), two_triangles());
    push("two-squares".into(), two_squares());
    push(
        "cycle-with-triangle:5".into(),
        cycle_with_filled_triangle(5),
    );
    z
}

/// Builds a named complex: `simplex:m`, `boundary:m`, `cycle:m`,
/// `points:m`, `cycle-with-triangle:m`, `rp2`, `square-edge`,
/// `two-triangles`, `two-squares`.
pub fn from_spec(spec: &str) -> Result<SimplicialComplex, ComplexError> {
    let bad = |why: &str| ComplexError::Parse(format!("generator {spec:?}: {why}"));
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => (
            n,
            Some(
                a.trim()
                    .parse::<usize>()
                    .map_err(|_| bad("size is not a number"))?,
            ),
        ),
        None => (spec, None),
    };
    if let Some(m) = arg {
        if m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(m));
        }
    }
    let need = |min: usize| match arg {
        Some(m) if m >= min => Ok(m),
        Some(_) => Err(bad(&format!("size must be at least {min}"))),
        None => Err(bad("missing size")),
    };
    let fixed = |k: SimplicialComplex| {
        if arg.is_some() {
            Err(bad("takes no size"))
        } else {
            Ok(k)
        }
    };
    match name.trim() {
        "simplex" => Ok(simplex(need(1)?)),
        "boundary" => Ok(boundary_simplex(need(2)?)),
        "cycle" => Ok(cycle(need(3)?)),
        "points" => Ok(disjoint_points(need(1)?)),
        "cycle-with-triangle" => Ok(cycle_with_filled_triangle(need(4)?)),
        "rp2" => fixed(rp2_minimal()),
        "square-edge" => fixed(square_edge()),
        "two-triangles" => fixed(two_triangles()),
        "two-squares" => fixed(two_squares()),
        _ => Err(bad("unknown name")),
    }
}

/// A random complex on exactly `m` vertices: a few random faces, then
/// every uncovered vertex added as an isolated point.
pub fn random_complex<R: Rng>(rng: &mut R, m: usize) -> SimplicialComplex {
    let count = rng.gen_range(1..=2 * m.max(1));
    let mut faces = Vec::with_capacity(count + m);
    for _ in 0..count {
        let size = rng.gen_range(1..=m.clamp(1, 4));
        let mut s = VertexSet::EMPTY;
        while s.len() < size.min(m) {
            s = s.with(rng.gen_range(0..m));
        }
        faces.push(s);
    }
    faces.extend((0..m).map(VertexSet::singleton));
    SimplicialComplex::from_maximal_faces(m, faces).expect("random complex is valid")
}

/// A single random gluing `K' ∪_σ Δ^n` with `K'` nonempty, `σ ∈ K'`, at
/// least one new vertex, and at most `max_m` vertices in total.
pub fn random_attachment<R: Rng>(
    rng: &mut R,
    max_m: usize,
) -> (SimplicialComplex, VertexSet, usize, SimplicialComplex) {
    assert!(max_m >= 2);
    let m0 = rng.gen_range(1..max_m);
    let base = random_complex(rng, m0);
    let faces = base.faces();
    let sigma = faces[rng.gen_range(0..faces.len())];
    let fresh = rng.gen_range(1..=max_m - m0);
    let n = sigma.len() + fresh - 1;
    let k = base.attach_simplex(sigma, n).expect("sigma is a face");
    (base, sigma, n, k)
}

/// Replays a seeded random sequence of simplex gluings, starting from a
/// simplex, while staying within `max_m` vertices.
pub fn iterated_attachment(seed: u64, max_m: usize) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = rng.gen_range(1..=max_m.clamp(1, 3));
    let mut k = simplex(start);
    let steps = rng.gen_range(0..=max_m);
    for _ in 0..steps {
        if k.m() >= max_m {
            break;
        }
        let faces = k.faces();
        let sigma = faces[rng.gen_range(0..faces.len())];
        let fresh = rng.gen_range(1..=(max_m - k.m()).min(2));
        k = k
            .attach_simplex(sigma, sigma.len() + fresh - 1)
            .expect("sigma is a face");
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zoo_names_parse() {
        for e in zoo() {
            assert_eq!(from_spec(&e.name).unwrap(), e.complex, "{}", e.name);
        }
        assert!(from_spec("cycle:2").is_err());
        assert!(from_spec("rp2:3").is_err());
        assert!(from_spec("torus").is_err());
        assert!(matches!(
            from_spec("simplex:99"),
            Err(ComplexError::TooManyVertices(99))
        ));
    }

    #[test]
    fn sizes() {
        assert_eq!(cycle(5).facets().len(), 5);
        assert_eq!(rp2_minimal().facets().len(), 10);
        assert_eq!(disjoint_points(2), boundary_simplex(2));
        assert_eq!(boundary_simplex(3), cycle(3));
    }

    #[test]
    fn rp2_is_a_closed_surface() {
        let k = rp2_minimal();
        for (a, b) in k.edges() {
            let e = VertexSet::from_iter([a, b]);
            let n = k.facets().iter().filter(|f| e.is_subset(**f)).count();
            assert_eq!(n, 2);
        }
        // Euler characteristic 6 - 15 + 10 = 1
        assert_eq!(k.f_vector(), vec![1, 6, 15, 10]);
    }

    #[test]
    fn iterated_attachment_is_seeded() {
        assert_eq!(iterated_attachment(7, 6), iterated_attachment(7, 6));
        for seed in 0..50 {
            let k = iterated_attachment(seed, 6);
            assert!(k.m() <= 6);
            assert!(k.is_flag() && k.is_chordal_skeleton());
        }
    }
}
