use tritile::*;
use rand::Rng;
use tritile::generators::rng;
use tritile::regularity::*;
use tritile::generators::stream_seed;
use tritile::Exact;
use num_traits::{One, Signed, Zero};

fn q(num: i64, den: i64) -> Exact {
    Exact::ratio(num, den)
}

fn random_bipartite(sa: usize, sb: usize, p: f64, seed: u64) -> (Graph, VertexSet, VertexSet) {
    let mut g = Graph::empty(sa + sb);
    let mut r = rng(seed);
    for u in 0..sa {
        for v in sa..sa + sb {
            if r.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    let n = sa + sb;
    (g, VertexSet::range(n, 0..sa), VertexSet::range(n, sa..n))
}

fn two_halves(h: usize) -> (Graph, VertexSet, VertexSet) {
    // A = 0..2h, B = 2h..4h; A1-B1 and A2-B2 complete
    let n = 4 * h;
    let mut g = Graph::empty(n);
    for i in 0..h {
        for j in 0..h {
            g.add_edge(i, 2 * h + j).unwrap();
            g.add_edge(h + i, 3 * h + j).unwrap();
        }
    }
    (g, VertexSet::range(n, 0..2 * h), VertexSet::range(n, 2 * h..n))
}

#[test]
fn densities() {
    let g = Graph::complete_multipartite(&[3, 4]);
    let (a, b) = (VertexSet::range(7, 0..3), VertexSet::range(7, 3..7));
    assert_eq!(density::<Exact>(&g, &a, &b).unwrap(), Exact::one());
    assert!(density::<Exact>(&Graph::empty(7), &a, &b).unwrap().is_zero());
    let k4 = Graph::complete(4);
    let d = density::<Exact>(&k4, &VertexSet::range(4, 0..2), &VertexSet::range(4, 2..4)).unwrap();
    assert_eq!(d, Exact::one());
    assert_eq!(density::<Exact>(&g, &VertexSet::new(7), &b), Err(Error::EmptySide));
    assert_eq!(density::<Exact>(&g, &a, &a), Err(Error::OverlappingSides));
}

#[test]
fn complete_pair_has_no_witness() {
    let g = Graph::complete_multipartite(&[6, 6]);
    let (a, b) = (VertexSet::range(12, 0..6), VertexSet::range(12, 6..12));
    assert_eq!(regularity_refuter(&g, &a, &b, &q(1, 2), 0, 0).unwrap(), None);
    let g = Graph::complete_multipartite(&[30, 30]);
    let (a, b) = (VertexSet::range(60, 0..30), VertexSet::range(60, 30..60));
    assert_eq!(regularity_refuter(&g, &a, &b, &q(1, 10), 50, 0).unwrap(), None);
}

#[test]
fn two_halves_are_refuted() {
    for h in [3, 20] {
        let (g, a, b) = two_halves(h);
        let w = regularity_refuter(&g, &a, &b, &q(2, 5), 20, 1).unwrap().expect("irregular pair");
        assert_eq!(w.deviation, q(1, 2));
        assert!(w.recheck(&g, &a, &b, &q(2, 5)));
    }
}

/// Full 2^|A| x 2^|B| scan, independent of the refuter's incremental counts.
fn has_violation_brute(g: &Graph, a: &VertexSet, b: &VertexSet, eps: &Exact) -> bool {
    let av = a.to_vec();
    let bv = b.to_vec();
    let dab = density::<Exact>(g, a, b).unwrap();
    for xm in 1u32..(1 << av.len()) {
        let x = VertexSet::from_iter(g.n(), (0..av.len()).filter(|i| xm >> i & 1 == 1).map(|i| av[i]));
        if Exact::from_count(x.len()) < eps.clone() * Exact::from_count(av.len()) {
            continue;
        }
        for ym in 1u32..(1 << bv.len()) {
            let y = VertexSet::from_iter(g.n(), (0..bv.len()).filter(|j| ym >> j & 1 == 1).map(|j| bv[j]));
            if Exact::from_count(y.len()) < eps.clone() * Exact::from_count(bv.len()) {
                continue;
            }
            let dxy = density::<Exact>(g, &x, &y).unwrap();
            if (dxy - dab.clone()).abs() > *eps {
                return true;
            }
        }
    }
    false
}

#[test]
fn exhaustive_agrees_with_full_scan() {
    let eps = q(3, 10);
    for seed in 0..50 {
        let (g, a, b) = random_bipartite(6, 6, 0.5, stream_seed(seed, 9));
        let got = regularity_refuter(&g, &a, &b, &eps, 0, seed).unwrap();
        assert_eq!(got.is_some(), has_violation_brute(&g, &a, &b, &eps), "seed {seed}");
    }
}

#[test]
fn typical_filter_cases() {
    let g = Graph::complete_multipartite(&[5, 5]);
    let (a, b) = (VertexSet::range(10, 0..5), VertexSet::range(10, 5..10));
    let (typ, atyp) = typical_vertex_filter(&g, &a, &b, &b, &Exact::one(), &q(1, 2)).unwrap();
    assert_eq!((typ.len(), atyp.len()), (5, 0));
    let (typ, atyp) = typical_vertex_filter(&Graph::empty(10), &a, &b, &b, &q(1, 2), &q(1, 10)).unwrap();
    assert_eq!((typ.len(), atyp.len()), (0, 5));
    assert!(typical_vertex_filter(&g, &a, &b, &VertexSet::new(10), &Exact::one(), &q(1, 2)).is_err());
}

#[test]
fn typical_filter_tie_goes_to_atypical() {
    // each x in A sees exactly 2 of |Y| = 4; threshold (3/4 - 1/4) * 4 = 2
    let mut g = Graph::empty(6);
    for x in 0..2 {
        g.add_edge(x, 2).unwrap();
        g.add_edge(x, 3).unwrap();
    }
    let (a, b) = (VertexSet::range(6, 0..2), VertexSet::range(6, 2..6));
    let (typ, atyp) = typical_vertex_filter(&g, &a, &b, &b, &q(3, 4), &q(1, 4)).unwrap();
    assert_eq!((typ.len(), atyp.len()), (0, 2));
    let (typ, _) = typical_vertex_filter(&g, &a, &b, &b, &q(3, 4), &q(26, 100)).unwrap();
    assert_eq!(typ.len(), 2);
}

#[test]
fn typical_filter_on_random_pairs() {
    for seed in 0..50 {
        let (g, a, b) = random_bipartite(200, 200, 0.5, seed);
        let (typ, atyp) = typical_vertex_filter(&g, &a, &b, &b, &q(1, 2), &q(1, 10)).unwrap();
        assert_eq!(typ.len() + atyp.len(), 200);
        assert!(!typ.intersects(&atyp));
        assert!(atyp.len() * 10 <= 200, "seed {seed}: {} atypical", atyp.len());
    }
}

/// Direct powering: (1 - gamma)^t computed as a product of t factors.
fn power(base: &Exact, t: usize) -> Exact {
    (0..t).fold(Exact::one(), |acc, _| acc * base.clone())
}

#[test]
fn t_bound_values() {
    assert_eq!(t_bound(&q(1, 2), &q(1, 10)).unwrap(), 7);
    assert!(power(&q(7, 10), 6) >= q(1, 10) && power(&q(7, 10), 7) < q(1, 10));
    assert_eq!(t_bound(&q(9, 10), &q(1, 10)).unwrap(), 2);
    assert!(matches!(t_bound(&q(1, 5), &q(1, 10)), Err(Error::DegenerateParameters(_))));
    // (1 - (1 - 1/2))^2 = 1/4 = eps exactly: strict < needs t = 3
    assert_eq!(power(&q(1, 2), 2), q(1, 4));
    assert_eq!(t_bound(&Exact::one(), &q(1, 4)).unwrap(), 3);
}

#[test]
fn dominating_small_cases() {
    let g = Graph::complete_multipartite(&[4, 6]);
    let (a, b) = (VertexSet::range(10, 0..4), VertexSet::range(10, 4..10));
    let r = dominating_greedy(&g, &a, &b, &q(1, 2), &q(1, 10)).unwrap();
    assert_eq!(r.picks, vec![0]);
    assert_eq!(r.covered, b);
    assert!(r.reached);

    let star = Graph::complete_multipartite(&[1, 5]);
    let (a, b) = (VertexSet::range(6, 0..1), VertexSet::range(6, 1..6));
    let r = dominating_greedy(&star, &a, &b, &q(1, 2), &q(1, 10)).unwrap();
    assert_eq!(r.picks.len(), 1);
    assert!(dominating_greedy(&star, &a, &b, &q(1, 5), &q(1, 10)).is_err());
}

#[test]
fn dominating_shrinks_geometrically() {
    let (eps, d) = (q(1, 10), q(1, 2));
    let gamma = q(3, 10);
    for seed in 0..20 {
        let (g, a, b) = random_bipartite(120, 120, 0.5, seed);
        let r = dominating_greedy(&g, &a, &b, &d, &eps).unwrap();
        assert!(r.picks.len() <= r.t_target);
        for (i, w) in r.uncovered_sizes.windows(2).enumerate() {
            if !r.irregular_steps.contains(&i) {
                let allowed = (Exact::one() - gamma.clone()) * Exact::from_count(w[0]);
                assert!(Exact::from_count(w[1]) <= allowed);
            }
        }
        if r.irregular_steps.is_empty() {
            assert!(r.reached);
        }
    }
}

#[test]
fn reduced_degree_formula() {
    let z = Exact::zero();
    assert_eq!(reduced_min_degree_bound(60, 100, &z, &z, 10).unwrap(), Exact::from_count(6));
    assert_eq!(reduced_min_degree_bound(50, 100, &q(1, 10), &q(1, 10), 20).unwrap(), Exact::from_count(6));
    assert!(reduced_min_degree_bound(0, 100, &z, &z, 10).unwrap().is_zero());
    assert!(reduced_min_degree_bound(5, 0, &z, &z, 10).is_err());
}

#[test]
fn slicing_keeps_random_pairs_dense() {
    // large sub-pairs of a dense random pair keep their density
    for seed in 0..10 {
        let (g, a, b) = random_bipartite(100, 100, 0.6, seed);
        let d: f64 = density(&g, &a, &b).unwrap();
        let a2 = VertexSet::from_iter(200, a.iter().take(40));
        let b2 = VertexSet::from_iter(200, b.iter().skip(30).take(40));
        let d2: f64 = density(&g, &a2, &b2).unwrap();
        assert!((d - d2).abs() < 0.1);
    }
}
