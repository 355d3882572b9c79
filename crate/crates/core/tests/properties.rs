mod common;

use std::collections::BTreeSet;

use common::*;
use num_traits::Signed;
use permfunc_core::characters::mn_value;
use permfunc_core::engine::{
    det_cauchy_binet_sum, det_linear_sum, gmf_block, gmf_linear_sum, gmf_naive, per_linear_sum, singular_values,
};
use permfunc_core::matrix::{block_matrix, linear_sum, perm_matrix, psd_classify, s_matrix};
use permfunc_core::perm::x_set;
use permfunc_core::{
    BlockSpec, CharacterSpec, CycleStructure, GaussianRational, GroupSpec, Partition, Permutation, PsdClassification,
};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| to_perm(&v))
}

fn perm_pair(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| (perm(n), perm(n)))
}

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-5i64..=5, 1i64..=3, -3i64..=3).prop_map(|(p, q, im)| GaussianRational::from_ratio(p, q) + GaussianRational::from_ints(0, im))
}

fn zero_based(p: &Permutation) -> Vec<usize> {
    p.images().iter().map(|x| x - 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn x_set_matches_scan((theta, tau) in perm_pair(6)) {
        let n = theta.degree();
        let (t0, u0) = (zero_based(&theta), zero_based(&tau));
        let scanned: BTreeSet<Vec<usize>> = all_perms(n)
            .into_iter()
            .filter(|s| (0..n).all(|i| s[i] == t0[i] || s[i] == u0[i]))
            .collect();
        let xs = x_set(&theta, &tau).unwrap();
        let listed: BTreeSet<Vec<usize>> = xs.iter().map(|e| zero_based(&e.sigma)).collect();
        prop_assert_eq!(&listed, &scanned);
        let r = theta.inverse().compose(&tau).unwrap().disjoint_cycles().r();
        prop_assert_eq!(xs.len(), 1usize << r);
        for e in &xs {
            let moved = (1..=n).filter(|&i| e.sigma.apply(i) != theta.apply(i)).count();
            prop_assert_eq!(e.t_sigma, moved);
        }
    }

    #[test]
    fn x_set_of_inverses((theta, tau) in perm_pair(6)) {
        let direct: BTreeSet<Permutation> = x_set(&theta, &tau).unwrap().into_iter().map(|e| e.sigma.inverse()).collect();
        let inverted: BTreeSet<Permutation> =
            x_set(&theta.inverse(), &tau.inverse()).unwrap().into_iter().map(|e| e.sigma).collect();
        prop_assert_eq!(direct, inverted);
    }

    #[test]
    fn perm_matrix_is_homomorphism((theta, tau) in perm_pair(8)) {
        let product = perm_matrix(&theta).mul(&perm_matrix(&tau)).unwrap();
        let composed = perm_matrix(&theta.compose(&tau).unwrap());
        prop_assert_eq!(&product, &composed);
        prop_assert_eq!(grid(&composed), mul(&perm_grid(&theta), &perm_grid(&tau)));
        prop_assert_eq!(s_matrix(&theta), s_matrix(&theta.inverse()));
        prop_assert_eq!(s_matrix(&theta).transpose(), s_matrix(&theta));
    }

    #[test]
    fn determinant_routes_agree((theta, tau) in perm_pair(6), a in scalar(), b in scalar()) {
        let n = theta.degree();
        let closed = det_linear_sum(&a, &b, &theta, &tau).unwrap().value;
        let formula = gmf_linear_sum(&a, &b, &theta, &tau, &GroupSpec::symmetric(n), &CharacterSpec::Sign).unwrap().value;
        let cb = det_cauchy_binet_sum(&perm_matrix(&theta).scale(&a), &perm_matrix(&tau).scale(&b)).unwrap().value;
        let cofactor = cofactor_det(&linear_sum_grid(&a, &b, &theta, &tau));
        prop_assert_eq!(&closed, &formula);
        prop_assert_eq!(&closed, &cb);
        prop_assert_eq!(&closed, &cofactor);
    }

    #[test]
    fn permanent_routes_agree((theta, tau) in perm_pair(6), a in scalar(), b in scalar()) {
        let n = theta.degree();
        let closed = per_linear_sum(&a, &b, &theta, &tau).unwrap().value;
        let formula = gmf_linear_sum(&a, &b, &theta, &tau, &GroupSpec::symmetric(n), &CharacterSpec::Trivial).unwrap().value;
        let brute = gmf_brute(&linear_sum_grid(&a, &b, &theta, &tau), &all_perms(n), |_| int(1));
        prop_assert_eq!(&closed, &formula);
        prop_assert_eq!(&closed, &brute);
    }

    #[test]
    fn closed_forms_match_subset_sum((theta, tau) in perm_pair(7), a in scalar(), b in scalar()) {
        // sum over cycle subsets I of sgn(theta) (-1)^(|I| + t) a^(n-F-t) b^t (a+b)^F, t = sum_I l_i
        let n = theta.degree();
        let q = theta.inverse().compose(&tau).unwrap().disjoint_cycles();
        let lengths: Vec<usize> = q.cycles.iter().map(Vec::len).collect();
        let f = q.fixed_points.len();
        let mut det = GaussianRational::zero();
        let mut per = GaussianRational::zero();
        for mask in 0u32..(1 << lengths.len()) {
            let chosen: Vec<usize> = (0..lengths.len()).filter(|i| mask >> i & 1 == 1).map(|i| lengths[i]).collect();
            let t: usize = chosen.iter().sum();
            let mono = a.pow((n - f - t) as u64) * b.pow(t as u64);
            per += mono.clone();
            if (chosen.len() + t).is_multiple_of(2) { det += mono } else { det -= mono }
        }
        let overlap = (&a + &b).pow(f as u64);
        let det = &overlap * &det * int(theta.sign());
        let per = &overlap * &per;
        prop_assert_eq!(det_linear_sum(&a, &b, &theta, &tau).unwrap().value, det);
        prop_assert_eq!(per_linear_sum(&a, &b, &theta, &tau).unwrap().value, per);
    }

    #[test]
    fn spectrum_conservation((theta, tau) in perm_pair(6), a in scalar(), b in scalar()) {
        let n = theta.degree();
        let s = singular_values(&a, &b, &theta, &tau).unwrap();
        let sum: f64 = s.values.iter().map(|x| x * x).sum();
        let (ar, ai) = a.to_f64();
        let (br, bi) = b.to_f64();
        let fixed = theta.inverse().compose(&tau).unwrap().fixed_count() as f64;
        let expected = n as f64 * (ar * ar + ai * ai + br * br + bi * bi) + 2.0 * fixed * (ar * br + ai * bi);
        prop_assert!((sum - expected).abs() <= 1e-9 * expected.max(1.0));
        let (dr, di) = cofactor_det(&linear_sum_grid(&a, &b, &theta, &tau)).to_f64();
        let prod: f64 = s.values.iter().map(|x| x * x).product();
        let scale = (sum / n as f64).powi(n as i32).max(1.0);
        prop_assert!((prod - (dr * dr + di * di)).abs() <= 1e-9 * scale);
    }

    #[test]
    fn psd_verdict_reproduces_matrix(n in 1usize..=6, seed in any::<u64>(), k in -4i64..=4, m in -4i64..=4) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let pi = random_involution(&mut rng, n);
        let theta = random_perm(&mut rng, n);
        let id = Permutation::identity(n);
        let verdict = psd_classify(&int(k), &int(m), &id, &pi).unwrap();
        let grid_n = linear_sum_grid(&int(k), &int(m), &id, &pi);
        prop_assert_eq!(verdict.is_psd(), psd_by_minors(&grid_n));
        if let PsdClassification::Psd { k, m, pi, .. } = verdict {
            prop_assert!(k >= m.abs() && pi.is_involution());
            let rebuilt = linear_sum_grid(&GaussianRational::from_real(k), &GaussianRational::from_real(m), &id, &pi);
            prop_assert_eq!(rebuilt, grid_n);
        }
        let other = psd_classify(&int(k), &int(m), &theta, &pi).unwrap();
        prop_assert_eq!(other.is_psd(), psd_by_minors(&linear_sum_grid(&int(k), &int(m), &theta, &pi)));
    }
}

fn block_spec() -> impl Strategy<Value = BlockSpec> {
    (1usize..=4)
        .prop_flat_map(|m| (Just(m), 1..=(8 / m).min(3)))
        .prop_flat_map(|(m, n)| {
            (
                Just(m),
                Just(n),
                perm(n),
                perm(n),
                proptest::collection::vec(perm(m), n),
                proptest::collection::vec(perm(m), n),
                proptest::collection::vec(scalar(), n),
                proptest::collection::vec(scalar(), n),
            )
        })
        .prop_map(|(m, n, theta, tau, inner_thetas, inner_taus, a, b)| BlockSpec { m, n, theta, tau, inner_thetas, inner_taus, a, b })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn block_formula_matches_naive(spec in block_spec(), which in 0usize..3) {
        let size = spec.m * spec.n;
        let g = GroupSpec::symmetric(size);
        let chi = match which {
            0 => CharacterSpec::Trivial,
            1 => CharacterSpec::Sign,
            _ => CharacterSpec::Irreducible(Partition::all(size)[size / 2].clone()),
        };
        let fast = gmf_block(&spec, &g, &chi).unwrap();
        let slow = gmf_naive(&block_matrix(&spec).unwrap(), &g, &chi).unwrap();
        prop_assert_eq!(fast.value, slow.value);
    }

    #[test]
    fn block_matrix_is_weighted_alpha_plus_beta(spec in block_spec()) {
        let alpha = spec.alpha().unwrap();
        let beta = spec.beta().unwrap();
        let size = spec.m * spec.n;
        let mut expected = vec![vec![GaussianRational::zero(); size]; size];
        for x in 1..=size {
            let (ra, rb) = (alpha.apply(x), beta.apply(x));
            expected[ra - 1][x - 1] += spec.a[spec.block_of(ra) - 1].clone();
            expected[rb - 1][x - 1] += spec.b[spec.block_of(rb) - 1].clone();
        }
        prop_assert_eq!(grid(&block_matrix(&spec).unwrap()), expected);
    }

    #[test]
    fn generated_groups_are_closed(n in 2usize..=5, seed in any::<u64>(), count in 1usize..=2) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<Permutation> = (0..count).map(|_| random_perm(&mut rng, n)).collect();
        let g = GroupSpec::generated_by(n, gens.clone()).unwrap();
        let elems: BTreeSet<Permutation> = g.enumerate_default().unwrap().elements.into_iter().collect();
        for x in &elems {
            for y in &elems {
                prop_assert!(elems.contains(&x.compose(y).unwrap()));
            }
        }
        for s in all_perms(n) {
            let s = to_perm(&s);
            prop_assert_eq!(g.contains(&s).unwrap(), elems.contains(&s));
        }
        for gen in &gens {
            prop_assert!(elems.contains(gen));
        }
        prop_assert_eq!(g.order().unwrap(), elems.len().into());
    }

    #[test]
    fn cyclic_groups_agree_with_powers(n in 1usize..=7, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let gen = random_perm(&mut rng, n);
        let powers: BTreeSet<Permutation> = (0..gen.order()).map(|k| gen.pow(k)).collect();
        let g = GroupSpec::cyclic(gen.clone());
        let listed: BTreeSet<Permutation> = g.enumerate_default().unwrap().elements.into_iter().collect();
        prop_assert_eq!(&listed, &powers);
        let probe = random_perm(&mut rng, n);
        prop_assert_eq!(g.contains(&probe).unwrap(), powers.contains(&probe));
    }
}

#[test]
fn characters_match_frobenius_formula() {
    for n in 1..=7 {
        for lambda in partitions(n) {
            let part = Partition::new(lambda.clone()).unwrap();
            for mu in partitions(n) {
                let cs = CycleStructure {
                    lengths: mu.iter().copied().filter(|&l| l > 1).collect(),
                    fixed_count: mu.iter().filter(|&&l| l == 1).count(),
                };
                assert_eq!(mn_value(&part, &cs).unwrap(), frobenius_character(&lambda, &mu), "{lambda:?} at {mu:?}");
            }
            assert_eq!(CharacterSpec::Irreducible(part).degree(), hook_length_degree(&lambda), "{lambda:?}");
        }
    }
}

#[test]
fn character_orthogonality() {
    for n in 1..=6 {
        let elems = all_perms(n);
        let lambdas = Partition::all(n);
        let order = elems.len() as i64;
        assert_eq!(lambdas.iter().map(|l| CharacterSpec::Irreducible(l.clone()).degree().pow(2)).sum::<u64>(), order as u64);
        let tables: Vec<Vec<i64>> = lambdas
            .iter()
            .map(|l| {
                let chi = CharacterSpec::Irreducible(l.clone());
                elems.iter().map(|s| chi.evaluate(&to_perm(s)).unwrap().re().to_integer().try_into().unwrap()).collect()
            })
            .collect();
        for (i, x) in tables.iter().enumerate() {
            for (j, y) in tables.iter().enumerate() {
                let inner: i64 = x.iter().zip(y).map(|(u, v)| u * v).sum();
                assert_eq!(inner, if i == j { order } else { 0 }, "n={n} {} {}", lambdas[i], lambdas[j]);
            }
        }
    }
}

#[test]
fn characters_are_class_functions() {
    let n = 5;
    let perms: Vec<Permutation> = all_perms(n).iter().map(|s| to_perm(s)).collect();
    for lambda in Partition::all(n) {
        let chi = CharacterSpec::Irreducible(lambda);
        for s in perms.iter().step_by(7) {
            let v = chi.evaluate(s).unwrap();
            for h in perms.iter().step_by(11) {
                assert_eq!(chi.evaluate(&s.conjugate_by(h).unwrap()).unwrap(), v);
            }
        }
    }
}

#[test]
fn linear_sum_matches_definition() {
    let theta = Permutation::parse("(1 3 2)(4 5)", 5).unwrap();
    let tau = Permutation::parse("(2 5)", 5).unwrap();
    let (a, b) = (GaussianRational::from_ints(1, 1), GaussianRational::from_ratio(-1, 2));
    assert_eq!(grid(&linear_sum(&a, &b, &theta, &tau).unwrap()), linear_sum_grid(&a, &b, &theta, &tau));
}
