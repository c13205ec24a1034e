use diskpos_core::numeric::{int, ratio};
use diskpos_core::orthopoly::{alternation_holds, isolate_all_real_roots, OrthopolyError, RationalPolynomial};
use diskpos_core::radius::maximal_radius;
use diskpos_core::symmetric::{a_matrix, circulant_spectrum, positivity_by_t, regular_polygon};
use diskpos_core::triangle::{triangle_collection, triangle_minors, triangle_positive, TriangleRadii};
use diskpos_core::{build_q_matrix, collection_positivity, DiskCollection, Verdict};
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

const TOL: f64 = 1e-10;

fn centers_strategy(max_n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 1..=max_n)
        .prop_map(|v| v.into_iter().map(|(x, y)| Complex64::new(x, y)).collect::<Vec<_>>())
        .prop_filter("centers at least 0.2 apart", |cs| {
            cs.iter().enumerate().all(|(i, a)| cs[..i].iter().all(|b| (a - b).norm() >= 0.2))
        })
}

/// Admissible collections: every radius is a fraction of the distance from its
/// center to the nearest other center.
fn collection_strategy(max_n: usize) -> impl Strategy<Value = DiskCollection> {
    centers_strategy(max_n).prop_flat_map(|cs| {
        let n = cs.len();
        prop::collection::vec(0.01..0.999f64, n).prop_map(move |fs| {
            let radii = (0..n)
                .map(|k| {
                    let nearest =
                        (0..n).filter(|&j| j != k).map(|j| (cs[j] - cs[k]).norm()).fold(f64::INFINITY, f64::min);
                    fs[k] * nearest.min(1.5)
                })
                .collect();
            let c = DiskCollection::new(cs.clone(), radii).unwrap();
            assert!(c.is_admissible());
            c
        })
    })
}

fn verdict(c: &DiskCollection) -> Verdict {
    collection_positivity(c, TOL).unwrap().verdict
}

fn max_entry(c: &DiskCollection) -> f64 {
    build_q_matrix(c).entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn q_is_hermitian(c in collection_strategy(7)) {
        let q = build_q_matrix(&c);
        let n = c.len();
        for i in 0..n {
            prop_assert_eq!(q.get(i, i).im, 0.0);
            for j in 0..n {
                prop_assert_eq!(q.get(i, j), q.get(j, i).conj());
            }
        }
    }

    #[test]
    fn small_radii_are_positive(cs in centers_strategy(6), fractions in prop::collection::vec(0.1..1.0f64, 6)) {
        let n = cs.len();
        let dmin = DiskCollection::new(cs.clone(), vec![1.0; n]).unwrap().min_pairwise_distance().unwrap_or(1.0);
        let radii = fractions[..n].iter().map(|f| f * 0.02 * dmin).collect();
        let c = DiskCollection::new(cs, radii).unwrap();
        prop_assert_eq!(verdict(&c), Verdict::PositiveDefinite);
    }

    #[test]
    fn subcollections_of_positive_collections_are_positive(c in collection_strategy(6)) {
        prop_assume!(verdict(&c) == Verdict::PositiveDefinite);
        for skip in 0..c.len() {
            let keep: Vec<usize> = (0..c.len()).filter(|&i| i != skip).collect();
            if keep.is_empty() {
                continue;
            }
            let sub = c.subcollection(&keep).unwrap();
            prop_assert_ne!(verdict(&sub), Verdict::NotPositiveDefinite);
        }
    }

    #[test]
    fn shrinking_radii_preserves_positivity(c in collection_strategy(6), shrink in prop::collection::vec(0.05..1.0f64, 6)) {
        prop_assume!(verdict(&c) == Verdict::PositiveDefinite);
        let radii = c.radii().iter().zip(&shrink).map(|(r, s)| r * s).collect();
        prop_assert_ne!(verdict(&c.with_radii(radii).unwrap()), Verdict::NotPositiveDefinite);
    }

    #[test]
    fn rigid_motions_leave_q_unchanged(c in collection_strategy(6), angle in 0.0..6.3f64, vx in -5.0..5.0f64, vy in -5.0..5.0f64) {
        let moved = c.transformed(Complex64::from_polar(1.0, angle), Complex64::new(vx, vy)).unwrap();
        let (q, p) = (build_q_matrix(&c), build_q_matrix(&moved));
        let scale = max_entry(&c);
        for i in 0..c.len() {
            for j in 0..c.len() {
                prop_assert!((q.get(i, j) - p.get(i, j)).norm() <= 1e-9 * scale);
            }
        }
        let (a, b) = (verdict(&c), verdict(&moved));
        if a != Verdict::Indeterminate && b != Verdict::Indeterminate {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn dilation_scales_entries(c in collection_strategy(5), t in 0.3..3.0f64) {
        let n = c.len();
        let centers = c.centers().iter().map(|a| a * t).collect();
        let radii = c.radii().iter().map(|r| r * t).collect();
        let scaled = DiskCollection::new(centers, radii).unwrap();
        let factor = t.powi(2 * n as i32);
        let (q, p) = (build_q_matrix(&c), build_q_matrix(&scaled));
        let scale = max_entry(&c) * factor;
        for i in 0..n {
            for j in 0..n {
                prop_assert!((q.get(i, j) * factor - p.get(i, j)).norm() <= 1e-9 * scale);
            }
        }
    }

    #[test]
    fn triangle_criterion_matches_the_matrix(r1 in 0.01..1.73f64, r2 in 0.01..1.73f64, r3 in 0.01..1.73f64) {
        let s = r1 * r1 + r2 * r2 + r3 * r3;
        prop_assume!((s - 3.0).abs() > 1e-6);
        let closed = triangle_positive(r1, r2, r3).unwrap().positive;
        let generic = verdict(&triangle_collection(r1, r2, r3).unwrap());
        prop_assert_eq!(closed, generic == Verdict::PositiveDefinite);
    }

    #[test]
    fn triangle_minors_match_numeric_minors(r1 in 0.05..1.7f64, r2 in 0.05..1.7f64, r3 in 0.05..1.7f64) {
        let t = TriangleRadii::from_radii(r1, r2, r3).unwrap();
        let (d1, d2, d3) = triangle_minors(t.x1, t.x2, t.x3).unwrap();
        let minors = build_q_matrix(&triangle_collection(r1, r2, r3).unwrap()).leading_principal_minors();
        // the scale of each minor: products of the diagonal entries
        let q = build_q_matrix(&triangle_collection(r1, r2, r3).unwrap());
        let diag: Vec<f64> = (0..3).map(|i| q.get(i, i).re.abs().max(q.get(i, (i + 1) % 3).norm())).collect();
        let scales = [diag[0], diag[0] * diag[1], diag[0] * diag[1] * diag[2]];
        for ((closed, numeric), s) in [d1, d2, d3].iter().zip(&minors).zip(scales) {
            prop_assert!((closed - numeric).abs() <= 1e-9 * s.max(1e-300), "{} vs {}", closed, numeric);
        }
    }

    #[test]
    fn spectrum_matches_dense_eigenvalues(n in 2u64..=10, z in -1.0..2.0f64) {
        let a = a_matrix(n as usize, z).unwrap();
        let mut t = circulant_spectrum(n, z).unwrap();
        t.sort_by(f64::total_cmp);
        let eig = a.eigenvalues();
        let scale = t.iter().map(|x| x.abs()).fold(1e-300, f64::max);
        for (x, y) in eig.iter().zip(&t) {
            prop_assert!((x - y).abs() <= 1e-9 * scale);
        }
    }

    #[test]
    fn t_criterion_is_monotone_in_r(n in 2u64..=12, r1 in 0.05..1.5f64, r2 in 0.05..1.5f64) {
        let (lo, hi) = if r1 < r2 { (r1, r2) } else { (r2, r1) };
        if positivity_by_t(n, hi).unwrap() {
            prop_assert!(positivity_by_t(n, lo).unwrap());
        }
    }

    #[test]
    fn t_criterion_matches_the_matrix(n in 2u64..=10, r in 0.05..1.5f64) {
        let rho = maximal_radius(n, 1e-13).unwrap().rho;
        prop_assume!((r - rho).abs() > 1e-4);
        let by_t = positivity_by_t(n, r).unwrap();
        let by_ldl = verdict(&regular_polygon(n as usize, r).unwrap());
        prop_assert_eq!(by_t, by_ldl == Verdict::PositiveDefinite);
        prop_assert_eq!(by_t, r < rho);
    }

    #[test]
    fn jacobi_alternation(k in 0u64..=8, a in -8i64..=8, b in -8i64..=8, da in 1i64..=3, db in 1i64..=3) {
        match alternation_holds(k, &ratio(a, da), &ratio(b, db)) {
            Ok(holds) => prop_assert!(holds),
            Err(OrthopolyError::DegenerateJacobi { .. }) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}

/// Real roots by construction: a product of linear factors `(x - r_i)` and
/// quadratics `x^2 + b x + c` with `b^2 < 4c`.
fn constructed(linear: &[i64], quadratics: &[(i64, i64)]) -> RationalPolynomial {
    let mut p = RationalPolynomial::one();
    for &r in linear {
        p = &p * &RationalPolynomial::from_integers(&[-r, 1]);
    }
    for &(b, c) in quadratics {
        p = &p * &RationalPolynomial::from_integers(&[c, b, 1]);
    }
    p
}

/// Eigenvalues of the companion matrix, grouped within 0.05 and counted as real
/// when the group's centroid has imaginary part below 1e-6. A root of
/// multiplicity `k` scatters by roughly `eps^(1/k)`; distinct roots of the
/// constructed polynomials are at least 0.5 apart.
fn companion_real_count(p: &RationalPolynomial) -> usize {
    let d = p.degree().unwrap();
    if d == 0 {
        return 0;
    }
    let lead = diskpos_core::numeric::to_f64(p.leading().unwrap());
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| diskpos_core::numeric::to_f64(c) / lead).collect();
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -coeffs[i];
    }
    let eig: Vec<Complex64> = m.complex_eigenvalues().iter().copied().collect();
    let mut group: Vec<usize> = (0..d).collect();
    for i in 0..d {
        for j in 0..i {
            if (eig[i] - eig[j]).norm() < 0.05 {
                let (from, to) = (group[i], group[j]);
                for x in group.iter_mut() {
                    if *x == from {
                        *x = to;
                    }
                }
            }
        }
    }
    let mut count = 0;
    for g in 0..d {
        let members: Vec<Complex64> = (0..d).filter(|&i| group[i] == g).map(|i| eig[i]).collect();
        if members.is_empty() {
            continue;
        }
        let centroid: Complex64 = members.iter().sum::<Complex64>() / members.len() as f64;
        if centroid.im.abs() < 1e-6 {
            count += members.len();
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sturm_counts_match_the_companion_oracle(
        linear in prop::collection::vec(-6i64..=6, 0..=8),
        quadratics in prop::collection::vec((-3i64..=3, 1i64..=9), 0..=2),
    ) {
        let quadratics: Vec<(i64, i64)> = quadratics.into_iter().filter(|&(b, c)| b * b < 4 * c).collect();
        prop_assume!(!linear.is_empty() || !quadratics.is_empty());
        let p = constructed(&linear, &quadratics);
        prop_assert!(p.degree().unwrap() <= 12);
        let isolated = isolate_all_real_roots(&p, 1e-9).unwrap();
        prop_assert_eq!(isolated.root_count(), linear.len());
        prop_assert_eq!(companion_real_count(&p), isolated.root_count());
        let mut distinct = linear.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(isolated.distinct_count(), distinct.len());
        for (iv, r) in isolated.intervals.iter().zip(&distinct) {
            prop_assert!(iv.lower <= int(*r) && int(*r) <= iv.upper);
            prop_assert_eq!(iv.multiplicity, linear.iter().filter(|&&x| x == *r).count());
        }
    }
}

#[test]
fn radius_brackets_the_t_criterion() {
    for n in 4..=20 {
        let rho = maximal_radius(n, 1e-13).unwrap().rho;
        assert!(positivity_by_t(n, rho - 1e-9).unwrap(), "n={n}");
        assert!(!positivity_by_t(n, rho + 1e-9).unwrap(), "n={n}");
    }
}
