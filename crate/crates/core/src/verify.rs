//! The reference checklist: known tables and structural theorems, each
//! recomputed from scratch. Used by `hhzk verify-paper`.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bigraded::{Bidegree, BigradedModule};
use crate::complex::{
    boundary_simplex, cycle, disjoint_points, flag_complex, random_attachment, random_complex,
    reachable_by_attachment, rp2_minimal, simplex, square_edge, top_classes, two_squares,
    two_triangles, zoo, SimplicialComplex,
};
use crate::hochster::{double_cohomology, double_homology, ChComplex};
use crate::homology::cohomology;
use crate::koszul::{
    d_prime_acyclicity, hochster_to_koszul_iso, KoszulCohomology, RComplex, RMonomial,
};
use crate::linalg::{rank_over_rationals, GroupSummary, Int, Integers, Rationals, Ring};

type CheckFn = fn() -> Result<String, String>;

/// Result of one checklist item.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub message: String,
}

const CHECKS: &[(&str, CheckFn)] = &[
    ("pentagon", pentagon),
    ("cycles", cycles),
    ("rp2", rp2),
    ("points", points),
    ("boundary", boundaries),
    ("surgery", surgery),
    ("chordal", chordal),
    ("join", join),
    ("pipelines", pipelines),
    ("bicomplex", bicomplex),
    ("acyclicity", acyclicity),
    ("euler", euler),
    ("examples", examples),
    ("duality", duality),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs every check whose name contains `only` (all when `None`).
pub fn run_checks(only: Option<&str>) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .filter(|(name, _)| only.is_none_or(|o| name.contains(o)))
        .map(|(name, f)| {
            let (passed, message) = match f() {
                Ok(m) => (true, m),
                Err(m) => (false, m),
            };
            CheckOutcome {
                name,
                passed,
                message,
            }
        })
        .collect()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn expect(what: &str, got: &BigradedModule, want: &BigradedModule) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want}, got {got}"))
    }
}

fn two_classes() -> BigradedModule {
    BigradedModule::free_from(&[(0, 0, 1), (1, 2, 1)])
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `HH` of an `m`-cycle: `ℤ` at `(0,0)`, `(-1,4)`, `(-m+3, 2(m-2))`, `(-m+2, 2m)`.
pub fn cycle_hh(m: usize) -> BigradedModule {
    if m == 4 {
        BigradedModule::free_from(&[(0, 0, 1), (1, 2, 2), (2, 4, 1)])
    } else {
        BigradedModule::free_from(&[(0, 0, 1), (1, 2, 1), (m - 3, m - 2, 1), (m - 2, m, 1)])
    }
}

fn pentagon() -> Result<String, String> {
    let ch = ChComplex::cohomology(&Integers, &cycle(5)).map_err(err)?;
    expect(
        "H",
        &ch.module(),
        &BigradedModule::free_from(&[(0, 0, 1), (1, 2, 5), (2, 3, 5), (3, 5, 1)]),
    )?;
    let rank = rank_over_rationals(&ch.differential(Bidegree::new(2, 3)));
    if rank != 4 {
        return Err(format!("d' from (-2, 6) has rank {rank}"));
    }
    expect("HH", &ch.double().map_err(err)?.module, &cycle_hh(5))?;
    Ok("H ranks 1,5,5,1; d' rank 4; HH four copies of Z".into())
}

fn cycles() -> Result<String, String> {
    for m in 4..=9 {
        expect(
            &format!("HH of {m}-cycle"),
            &double_cohomology(&Integers, &cycle(m)).map_err(err)?,
            &cycle_hh(m),
        )?;
    }
    Ok("m = 4..9".into())
}

fn rp2() -> Result<String, String> {
    let k = rp2_minimal();
    let mut want = BigradedModule::free_from(&[(0, 0, 1), (1, 3, 10), (2, 4, 15), (3, 5, 6)]);
    let z2 = GroupSummary {
        rank: 0,
        torsion: vec![Int::from(2)],
    };
    want.insert(Bidegree::new(3, 6), z2.clone());
    let ch = ChComplex::cohomology(&Integers, &k).map_err(err)?;
    expect("H", &ch.module(), &want)?;
    let hh = ch.double().map_err(err)?.module;
    if hh.get(Bidegree::new(3, 6)) != z2 || hh.get(Bidegree::new(0, 0)) != GroupSummary::free(1) {
        return Err(format!("HH = {hh}"));
    }
    let hh_hom = double_homology(&Integers, &k).map_err(err)?;
    if !hh_hom.get(Bidegree::new(3, 6)).is_zero() || !hh_hom.get(Bidegree::new(4, 6)).is_zero() {
        return Err(format!("HH_* = {hh_hom}"));
    }
    Ok(format!("HH = {hh}"))
}

fn points() -> Result<String, String> {
    for m in 3..=7 {
        let mut entries = vec![(0, 0, 1)];
        let mut alternating: i64 = 0;
        for q in 2..=m {
            let r = (q - 1) * binomial(m, q);
            entries.push((q - 1, q, r));
            alternating += if q % 2 == 0 { r as i64 } else { -(r as i64) };
        }
        let ch = ChComplex::cohomology(&Integers, &disjoint_points(m)).map_err(err)?;
        expect(
            &format!("H of {m} points"),
            &ch.module(),
            &BigradedModule::free_from(&entries),
        )?;
        let hh = ch.double().map_err(err)?.module;
        expect(&format!("HH of {m} points"), &hh, &two_classes())?;
        if alternating != 1
            || hh.euler_characteristic() != 0
            || ch.module().euler_characteristic() != 0
        {
            return Err(format!("binomial sum {alternating} for m = {m}"));
        }
    }
    Ok("m = 3..7, alternating binomial sum 1".into())
}

fn boundaries() -> Result<String, String> {
    for m in 2..=7 {
        let want = BigradedModule::free_from(&[(0, 0, 1), (1, m, 1)]);
        expect(
            &format!("HH of boundary of simplex on {m}"),
            &double_cohomology(&Integers, &boundary_simplex(m)).map_err(err)?,
            &want,
        )?;
    }
    Ok("m = 2..7".into())
}

fn surgery() -> Result<String, String> {
    let mut tested = 0;
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, _, _, k) = random_attachment(&mut rng, 7);
        if k.is_simplex() {
            continue;
        }
        tested += 1;
        expect(
            &format!("seed {seed}: {k}"),
            &double_cohomology(&Integers, &k).map_err(err)?,
            &two_classes(),
        )?;
    }
    Ok(format!("{tested} non-simplex results of 200 gluings"))
}

/// All graphs on `m` vertices as edge lists, indexed by edge bitmask.
fn graph_edges(m: usize) -> Vec<(usize, usize)> {
    (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .collect()
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for n in 0..m {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=n).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, n);
                    q
                })
            })
            .collect();
    }
    out
}

/// Smallest edge bitmask over all relabelings.
fn canonical(
    mask: u32,
    edges: &[(usize, usize)],
    index: &HashMap<(usize, usize), usize>,
    perms: &[Vec<usize>],
) -> u32 {
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .enumerate()
                .filter(|(e, _)| mask >> e & 1 == 1)
                .fold(0u32, |acc, (_, &(a, b))| {
                    let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                    acc | 1 << index[&(x, y)]
                })
        })
        .min()
        .unwrap_or(mask)
}

fn chordal() -> Result<String, String> {
    let mut graphs = 0;
    let mut classes = 0;
    for m in 1..=6 {
        let edges = graph_edges(m);
        let index: HashMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let perms = permutations(m);
        let mut done = std::collections::HashSet::new();
        for mask in 0u32..1 << edges.len() {
            graphs += 1;
            let chosen: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .filter(|(e, _)| mask >> e & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let k = flag_complex(m, &chosen);
            let lhs = k.is_flag() && k.is_chordal_skeleton();
            let rhs = reachable_by_attachment(&k);
            if lhs != rhs {
                return Err(format!("{k}: chordal flag {lhs}, reachable {rhs}"));
            }
            if !rhs || k.is_simplex() || !done.insert(canonical(mask, &edges, &index, &perms)) {
                continue;
            }
            classes += 1;
            expect(
                &format!("{k}"),
                &double_cohomology(&Integers, &k).map_err(err)?,
                &two_classes(),
            )?;
        }
    }
    Ok(format!(
        "{graphs} graphs; HH checked on {classes} isomorphism classes"
    ))
}

/// `dim HH(K * L)` predicted by the Künneth convolution over a field.
pub fn convolve(a: &BigradedModule, b: &BigradedModule) -> BigradedModule {
    let mut out: HashMap<Bidegree, usize> = HashMap::new();
    for (x, gx) in a.iter() {
        for (y, gy) in b.iter() {
            *out.entry(Bidegree::new(x.k + y.k, x.l + y.l)).or_default() += gx.rank * gy.rank;
        }
    }
    let mut m = BigradedModule::new();
    for (b, r) in out {
        m.insert(b, GroupSummary::free(r));
    }
    m
}

/// Twenty deterministic pairs from the zoo with at most eight vertices in total.
pub fn join_pairs() -> Vec<(String, String, SimplicialComplex, SimplicialComplex)> {
    let z = zoo();
    let mut out = Vec::new();
    for (i, a) in z.iter().enumerate() {
        for b in &z[i..] {
            if a.complex.m() + b.complex.m() <= 8 && out.len() < 20 {
                out.push((
                    a.name.clone(),
                    b.name.clone(),
                    a.complex.clone(),
                    b.complex.clone(),
                ));
            }
        }
    }
    out
}

fn join() -> Result<String, String> {
    let pairs = join_pairs();
    for (na, nb, a, b) in &pairs {
        let ha = double_cohomology(&Rationals, a).map_err(err)?;
        let hb = double_cohomology(&Rationals, b).map_err(err)?;
        let j = a.join(b).map_err(err)?;
        expect(
            &format!("{na} * {nb}"),
            &double_cohomology(&Rationals, &j).map_err(err)?,
            &convolve(&ha, &hb),
        )?;
    }
    let s0 = disjoint_points(2);
    let sq = double_cohomology(&Rationals, &s0.join(&s0).map_err(err)?).map_err(err)?;
    if sq.total_rank() != 4 || sq != double_cohomology(&Rationals, &cycle(4)).map_err(err)? {
        return Err(format!("S0 * S0 gives {sq}"));
    }
    Ok(format!("{} pairs over Q; S0 * S0 has rank 4", pairs.len()))
}

/// The zoo followed by `n` seeded random complexes on at most `m_max` vertices.
pub fn test_corpus(n: usize, m_max: usize, seed: u64) -> Vec<(String, SimplicialComplex)> {
    let mut out: Vec<(String, SimplicialComplex)> =
        zoo().into_iter().map(|e| (e.name, e.complex)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..n {
        let m = rand::Rng::gen_range(&mut rng, 1..=m_max);
        out.push((format!("random #{t}"), random_complex(&mut rng, m)));
    }
    out
}

fn pipelines() -> Result<String, String> {
    let corpus = test_corpus(100, 6, 7);
    for (name, k) in &corpus {
        let ch = ChComplex::cohomology(&Integers, k).map_err(err)?;
        let kc = KoszulCohomology::new(&Integers, k).map_err(err)?;
        expect(&format!("H of {name}"), &kc.module(), &ch.module())?;
        expect(
            &format!("HH of {name}"),
            &kc.double().map_err(err)?.module,
            &ch.double().map_err(err)?.module,
        )?;
    }
    for k in [rp2_minimal(), cycle(5)] {
        hochster_to_koszul_iso(&k).map_err(err)?;
    }
    Ok(format!(
        "{} complexes agree; basis map verified on RP2 and pentagon",
        corpus.len()
    ))
}

fn bicomplex() -> Result<String, String> {
    let corpus = test_corpus(100, 6, 7);
    for (name, k) in &corpus {
        RComplex::new(k)
            .check_identities(&Integers)
            .map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} complexes", corpus.len()))
}

fn acyclicity() -> Result<String, String> {
    let mut n = 0;
    for e in zoo() {
        if e.complex.is_simplex() {
            continue;
        }
        let r = d_prime_acyclicity(&Integers, &e.complex).map_err(err)?;
        if !r.module.is_empty() {
            return Err(format!("{}: H(R, d') = {}", e.name, r.module));
        }
        n += 1;
    }
    for m in 2..=5 {
        let r = d_prime_acyclicity(&Integers, &simplex(m)).map_err(err)?;
        let top = RMonomial::new(
            crate::complex::VertexSet::EMPTY,
            crate::complex::VertexSet::full(m),
        );
        let ok = r.module == BigradedModule::free_from(&[(0, m, 1)])
            && r.generators.len() == 1
            && r.generators[0].1.len() == 1
            && r.generators[0].1[0].0 == top
            && Integers.is_unit(&r.generators[0].1[0].1);
        if !ok {
            return Err(format!("simplex on {m}: {} {:?}", r.module, r.generators));
        }
    }
    Ok(format!(
        "{n} non-simplices acyclic; simplices m = 2..5 give Z at total degree 2m"
    ))
}

fn euler() -> Result<String, String> {
    let corpus = test_corpus(100, 6, 11);
    for (name, k) in &corpus {
        let hh = double_cohomology(&Integers, k).map_err(err)?;
        let want = i64::from(k.is_simplex());
        if hh.euler_characteristic() != want {
            return Err(format!(
                "{name}: Euler characteristic {}",
                hh.euler_characteristic()
            ));
        }
        if !k.is_simplex() && hh.total_rank() % 2 != 0 {
            return Err(format!("{name}: odd total rank {}", hh.total_rank()));
        }
    }
    Ok(format!("{} complexes", corpus.len()))
}

/// Expected `H` tables of the three wedge-decomposable examples.
pub fn example_tables() -> Vec<(&'static str, SimplicialComplex, BigradedModule)> {
    vec![
        (
            "square-edge",
            square_edge(),
            BigradedModule::free_from(&[
                (0, 0, 1),
                (1, 2, 5),
                (2, 3, 5),
                (3, 4, 1),
                (2, 4, 1),
                (3, 5, 1),
            ]),
        ),
        (
            "two-triangles",
            two_triangles(),
            BigradedModule::free_from(&[
                (0, 0, 1),
                (1, 2, 4),
                (1, 3, 2),
                (2, 3, 4),
                (3, 4, 1),
                (2, 4, 4),
                (3, 5, 2),
            ]),
        ),
        (
            "two-squares",
            two_squares(),
            BigradedModule::free_from(&[
                (0, 0, 1),
                (1, 2, 8),
                (2, 3, 12),
                (3, 4, 5),
                (2, 4, 2),
                (3, 5, 4),
                (4, 6, 2),
            ]),
        ),
    ]
}

fn examples() -> Result<String, String> {
    for (name, k, want) in example_tables() {
        let ch = ChComplex::cohomology(&Integers, &k).map_err(err)?;
        expect(&format!("H of {name}"), &ch.module(), &want)?;
        expect(
            &format!("HH of {name}"),
            &ch.double().map_err(err)?.module,
            &two_classes(),
        )?;
    }
    Ok("square-edge, two-triangles, two-squares".into())
}

/// Whether every top class of `k` is nonzero in `HH` at `(-(m-n), 2m)`.
pub fn top_classes_survive<R: Ring>(ring: &R, k: &SimplicialComplex) -> Result<usize, String> {
    let ch = ChComplex::cohomology(ring, k).map_err(err)?;
    let hh = ch.double().map_err(err)?;
    let full = k.vertices();
    let h = cohomology(ring, k, full);
    let tops = top_classes(ring, k, &h).map_err(err)?;
    let n = (k.dimension() + 1) as usize;
    let b = Bidegree::new(k.m() - n, k.m());
    for t in &tops {
        if b.simplicial_degree() != t.degree {
            return Err(format!("top class in degree {} of {k}", t.degree));
        }
        let x = ch
            .embed(b, full, &t.coords)
            .ok_or("no summand for the full vertex set")?;
        let c = hh.class_of(ring, b, &x).map_err(err)?;
        if c.iter().all(|v| ring.is_zero(v)) {
            return Err(format!("top class of {k} dies in HH"));
        }
    }
    Ok(tops.len())
}

/// Whether `dim HH^{-k,2l} = dim HH^{-(m-n)+k, 2(m-l)}` everywhere.
pub fn poincare_symmetric(k: &SimplicialComplex) -> Result<(), String> {
    let hh = double_cohomology(&Rationals, k).map_err(err)?;
    let (m, n) = (k.m(), (k.dimension() + 1) as usize);
    for (b, g) in hh.iter() {
        let dual = (b.k <= m - n && b.l <= m).then(|| Bidegree::new(m - n - b.k, m - b.l));
        if dual.map_or(0, |d| hh.rank(d)) != g.rank {
            return Err(format!("{k}: rank {} at {b} has no dual partner", g.rank));
        }
    }
    Ok(())
}

fn duality() -> Result<String, String> {
    for m in 2..=7 {
        if top_classes_survive(&Integers, &boundary_simplex(m))? != 1 {
            return Err(format!("boundary of simplex on {m}: no top class"));
        }
    }
    if top_classes_survive(&Integers, &rp2_minimal())? != 1 {
        return Err("RP2: no top class".into());
    }
    for m in 2..=7 {
        poincare_symmetric(&boundary_simplex(m))?;
    }
    for m in 4..=9 {
        poincare_symmetric(&cycle(m))?;
    }
    let kc = KoszulCohomology::new(&Rationals, &cycle(5)).map_err(err)?;
    let hh = kc.double().map_err(err)?;
    let (_, table) = kc
        .hh_products(&hh, Bidegree::new(1, 2), Bidegree::new(2, 3))
        .map_err(err)?;
    let nondegenerate =
        table.len() == 1 && table[0].len() == 1 && !Rationals.is_zero(&table[0][0][0]);
    if !nondegenerate {
        return Err(format!("pentagon pairing {table:?}"));
    }
    Ok("top classes survive; Poincare symmetry; pentagon pairing nondegenerate".into())
}
