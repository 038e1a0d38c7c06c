use bihom_core::coherence::BiHomObject;
use bihom_core::combinat::IndexSeq;
use bihom_core::exactlin::{DenseMap, Field};
use bihom_core::fixtures::{c3_classical, c3_squared_plain, c3_twisted, f7, perturb, power_map};
use bihom_core::structures::*;
use bihom_core::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Group-element oracle for the twisted C3 bialgebra: basis g^i, all
// endomorphisms g -> g^2, mu'(g^i, g^j) = g^{2i+2j}, delta'(g^i) = g^{2i} (x) g^{2i}.
fn s(i: usize) -> usize {
    2 * i % 3
}

fn mu_t(i: usize, j: usize) -> usize {
    (s(i) + s(j)) % 3
}

fn basis_of(m: &DenseMap, col: usize) -> usize {
    let hits: Vec<usize> = (0..m.dst_dim()).filter(|&r| !m.get(r, col).is_zero()).collect();
    assert_eq!(hits.len(), 1);
    assert!(m.get(hits[0], col).is_one());
    hits[0]
}

#[test]
fn twisted_multiplication_matches_group_oracle() {
    let b = c3_twisted().unwrap();
    let mu = b.mu().unwrap();
    let mut oracle_assoc = true;
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(basis_of(mu, i * 3 + j), mu_t(i, j));
            for k in 0..3 {
                oracle_assoc &= mu_t(mu_t(i, j), s(k)) == mu_t(s(i), mu_t(j, k));
            }
        }
    }
    assert!(oracle_assoc);
    let rep = check_semigroup(&b).unwrap();
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn untwisted_product_with_square_endos_is_not_bihom_associative() {
    // Plain group product with alpha = beta = g -> g^2: g*e*s(e) = g, s(g)*e*e = g^2.
    let plain = c3_squared_plain().unwrap();
    let rep = check_semigroup(plain.bundle()).unwrap();
    let d = rep.diagram("BiHom associativity").unwrap();
    assert!(!d.passed);
    assert!(rep.diagrams.iter().filter(|d| d.name.starts_with("multiplication commutes")).all(|d| d.passed));
}

#[test]
fn perturbed_multiplication_is_localized() {
    let b = c3_twisted().unwrap();
    let mu = perturb(b.mu().unwrap(), 0, 4, &f7().one()).unwrap();
    let bad = StructureBundle::new(b.object().clone(), Some(mu), b.eta().cloned(), b.delta().cloned(), b.epsilon().cloned())
        .unwrap();
    let rep = check_semigroup(&bad).unwrap();
    let d = rep.diagram("BiHom associativity").unwrap();
    assert!(!d.passed);
    let cx = d.counterexample.clone().unwrap();
    assert_ne!(cx.lhs, cx.rhs);
    assert!(cx.row < 3 && cx.col < 27);
}

#[test]
fn twisted_unit_laws_give_square_map() {
    let b = c3_twisted().unwrap();
    let f = b.field();
    let left = b.mu().unwrap().compose(&b.eta().unwrap().kron(&DenseMap::identity(f, 3)).unwrap()).unwrap();
    assert_eq!(left, power_map(f, 3, 2).unwrap());
    assert!(!left.is_identity());
    assert!(check_monoid(&b).unwrap().passed());
    assert!(check_comonoid(&b).unwrap().passed());
}

#[test]
fn perturbed_unit_fails() {
    let b = c3_twisted().unwrap();
    let eta = perturb(b.eta().unwrap(), 1, 0, &f7().one()).unwrap();
    let bad =
        StructureBundle::new(b.object().clone(), b.mu().cloned(), Some(eta), b.delta().cloned(), b.epsilon().cloned()).unwrap();
    let rep = check_monoid(&bad).unwrap();
    assert!(!rep.diagram("unit fixed by alpha").unwrap().passed);
    assert!(!rep.passed());
}

#[test]
fn missing_maps_are_errors() {
    let b = c3_twisted().unwrap();
    let bare = StructureBundle::new(b.object().clone(), None, None, b.delta().cloned(), None).unwrap();
    assert_eq!(check_semigroup(&bare), Err(Error::MissingMap("mu")));
    assert_eq!(check_comonoid(&bare), Err(Error::MissingMap("epsilon")));
    assert_eq!(delta_n(&bare, 0, Variant::Iterative), Err(Error::MissingMap("epsilon")));
    assert!(check_cosemigroup(&bare).unwrap().passed());
    let wrong = DenseMap::identity(f7(), 3);
    assert!(matches!(
        StructureBundle::new(b.object().clone(), Some(wrong), None, None, None),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn report_is_sorted_by_name() {
    let rep = check_bimonoid(&c3_twisted().unwrap()).unwrap();
    let names: Vec<&str> = rep.diagrams.iter().map(|d| d.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(rep.kind, StructureKind::Bimonoid);
}

#[test]
fn delta_small_cases() {
    let b = c3_twisted().unwrap();
    let f = b.field();
    let id = DenseMap::identity(f, 3);
    let delta = b.delta().unwrap();
    for v in [Variant::Iterative, Variant::Alternative] {
        assert!(delta_n(&b, 1, v).unwrap().is_identity());
        assert_eq!(&delta_n(&b, 2, v).unwrap(), delta);
        assert_eq!(&delta_n(&b, 0, v).unwrap(), b.epsilon().unwrap());
    }
    let beta = b.object().beta();
    let expected = DenseMap::compose_all(&[
        &DenseMap::kron_all(f, [&id, &id, beta]).unwrap(),
        &delta.kron(&id).unwrap(),
        delta,
    ])
    .unwrap();
    assert_eq!(delta_n(&b, 3, Variant::Iterative).unwrap(), expected);
}

// delta_n on grouplike elements by tracking exponents: delta'(g^i) = (2i, 2i)
// and Phi_{1,m} applies alpha^{m-1} to the first factor.
fn delta_oracle(n: usize, i: usize) -> Vec<usize> {
    if n == 1 {
        return vec![i];
    }
    let m = n - 1;
    let first = (0..m).fold(i, |e, _| s(e));
    std::iter::once(first).chain(delta_oracle(m, s(i))).collect()
}

#[test]
fn grouplike_delta_matches_oracle() {
    let b = c3_twisted().unwrap();
    for n in 1..=5 {
        let d = delta_n(&b, n, Variant::Iterative).unwrap();
        let a = delta_n(&b, n, Variant::Alternative).unwrap();
        assert_eq!(d, a, "n = {n}");
        for i in 0..3 {
            let target = basis_of(&d, i);
            let exps = delta_oracle(n, i);
            let flat = exps.iter().fold(0, |acc, &e| acc * 3 + e);
            assert_eq!(target, flat, "n = {n}, g^{i}");
        }
    }
}

#[test]
fn delta_and_mu_variants_agree_up_to_six() {
    for b in [c3_classical().unwrap(), c3_twisted().unwrap()] {
        for n in 0..=6 {
            assert_eq!(delta_n(&b, n, Variant::Iterative).unwrap(), delta_n(&b, n, Variant::Alternative).unwrap());
            assert_eq!(mu_n(&b, n, Variant::Iterative).unwrap(), mu_n(&b, n, Variant::Alternative).unwrap());
        }
    }
}

#[test]
fn mu_three_is_left_nested() {
    let b = c3_twisted().unwrap();
    let f = b.field();
    let id = DenseMap::identity(f, 3);
    let mu = b.mu().unwrap();
    let nu = b.object().nu().unwrap();
    let expected = DenseMap::compose_all(&[mu, &mu.kron(&id).unwrap(), &DenseMap::kron_all(f, [&id, &id, nu]).unwrap()])
        .unwrap();
    assert_eq!(mu_n(&b, 3, Variant::Alternative).unwrap(), expected);
    assert!(mu_n(&b, 1, Variant::Iterative).unwrap().is_identity());
}

#[test]
fn generalized_laws_on_twisted_c3() {
    let b = c3_twisted().unwrap();
    let co = coassoc_sweep(&b, 5).unwrap();
    assert!(co.len() > 50);
    for (k, rep) in &co {
        assert!(rep.passed(), "{k:?}: {rep:?}");
    }
    for (k, rep) in assoc_sweep(&b, 5).unwrap() {
        assert!(rep.passed(), "{k:?}: {rep:?}");
    }
    assert!(check_generalized_coassoc(&b, &IndexSeq::new(vec![1, 1, 1])).unwrap().passed());
    assert!(check_generalized_assoc(&b, &IndexSeq::new(vec![0, 2, 0])).unwrap().passed());
}

#[test]
fn perturbed_delta_fails_a_short_sequence() {
    let b = c3_twisted().unwrap();
    let f = b.field();
    for seed in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (r, c) = (rng.gen_range(0..9), rng.gen_range(0..3));
        let bump = f.from_i64(rng.gen_range(1..7));
        let delta = perturb(b.delta().unwrap(), r, c, &bump).unwrap();
        let bad = StructureBundle::new(b.object().clone(), None, None, Some(delta), b.epsilon().cloned()).unwrap();
        let failed = coassoc_sweep(&bad, 3).unwrap().into_iter().filter(|(k, rep)| k.total() <= 3 && !rep.passed()).count();
        assert!(failed > 0, "seed {seed}");
    }
}

#[test]
fn bisemigroup_and_bimonoid() {
    for b in [c3_classical().unwrap(), c3_twisted().unwrap()] {
        assert!(check_bisemigroup(&b).unwrap().passed());
        let rep = check_bimonoid(&b).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }
}

#[test]
fn compatibility_square() {
    let b = c3_twisted().unwrap();
    let name = "multiplication-comultiplication compatibility";
    // delta . alpha is still multiplicative here: every map is a group homomorphism.
    let delta = b.delta().unwrap().compose(b.object().alpha()).unwrap();
    let twisted = StructureBundle::new(b.object().clone(), b.mu().cloned(), None, Some(delta), None).unwrap();
    assert!(check_bisemigroup(&twisted).unwrap().diagram(name).unwrap().passed);
    let delta = b.delta().unwrap().scale(&b.field().from_i64(2)).unwrap();
    let scaled = StructureBundle::new(b.object().clone(), b.mu().cloned(), None, Some(delta), None).unwrap();
    let rep = check_bisemigroup(&scaled).unwrap();
    assert!(!rep.diagram(name).unwrap().passed);
    assert!(rep.diagram("BiHom coassociativity").unwrap().passed);
}

#[test]
fn zero_counit_fails_only_counit_on_unit_among_unit_squares() {
    let b = c3_twisted().unwrap();
    let zero = DenseMap::zero(b.field(), 1, 3);
    let bad = StructureBundle::new(b.object().clone(), b.mu().cloned(), b.eta().cloned(), b.delta().cloned(), Some(zero))
        .unwrap();
    let rep = check_bimonoid(&bad).unwrap();
    assert!(rep.diagram("counit multiplicative").unwrap().passed);
    assert!(rep.diagram("unit comultiplicative").unwrap().passed);
    assert!(!rep.diagram("counit on unit").unwrap().passed);
}

#[test]
fn bimonoid_is_conjunction_of_parts() {
    let base = c3_twisted().unwrap();
    let f = base.field();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let which = rng.gen_range(0..4);
        let mut maps = [base.mu().cloned(), base.eta().cloned(), base.delta().cloned(), base.epsilon().cloned()];
        if rng.gen_bool(0.7) {
            let m = maps[which].as_ref().unwrap();
            let (r, c) = (rng.gen_range(0..m.dst_dim()), rng.gen_range(0..m.src_dim()));
            maps[which] = Some(perturb(m, r, c, &f.from_i64(rng.gen_range(1..7))).unwrap());
        }
        let [mu, eta, delta, eps] = maps;
        let b = StructureBundle::new(base.object().clone(), mu, eta, delta, eps).unwrap();
        let full = check_bimonoid(&b).unwrap();
        let parts = check_bisemigroup(&b).unwrap().passed()
            && check_monoid(&b).unwrap().passed()
            && check_comonoid(&b).unwrap().passed()
            && ["counit multiplicative", "unit comultiplicative", "counit on unit"]
                .iter()
                .all(|n| full.diagram(n).unwrap().passed);
        assert_eq!(full.passed(), parts);
    }
}

#[test]
fn regular_modules_and_comodules() {
    for b in [c3_classical().unwrap(), c3_twisted().unwrap()] {
        assert!(check_module(&ModuleInst::regular(&b).unwrap()).unwrap().passed());
        assert!(check_comodule(&ComoduleInst::regular(&b).unwrap()).unwrap().passed());
        let rep = check_hopf_module(&HopfModuleInst::regular(&b).unwrap()).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }
}

#[test]
fn zero_action_fails_unit_square() {
    let b = c3_twisted().unwrap();
    let m = ModuleInst::new(b.object().clone(), DenseMap::zero(b.field(), 3, 9), b.clone()).unwrap();
    let rep = check_module(&m).unwrap();
    assert!(rep.diagram("module associativity").unwrap().passed);
    assert!(!rep.diagram("module unit").unwrap().passed);
}

#[test]
fn induced_actions() {
    for b in [c3_classical().unwrap(), c3_twisted().unwrap()] {
        let reg = ModuleInst::regular(&b).unwrap();
        assert_eq!(induced_module_action(&b, std::slice::from_ref(&reg)).unwrap(), reg);
        let two = induced_module_action(&b, &[reg.clone(), reg.clone()]).unwrap();
        assert_eq!(two.carrier.dim(), 9);
        let rep = check_module(&two).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let three = induced_module_action(&b, &[reg.clone(), two.clone()]).unwrap();
        assert!(check_module(&three).unwrap().passed());
        let none = induced_module_action(&b, &[]).unwrap();
        assert_eq!(none.carrier, BiHomObject::unit(b.field()));
        assert_eq!(&none.action, b.epsilon().unwrap());
        assert!(check_module(&none).unwrap().passed());
    }
    let other = c3_classical().unwrap();
    let reg = ModuleInst::regular(&other).unwrap();
    assert_eq!(induced_module_action(&c3_twisted().unwrap(), &[reg]), Err(Error::MixedStructures));
}

#[test]
fn rational_classical_group_algebra() {
    let b = bihom_core::fixtures::cyclic_group_algebra(Field::RATIONALS, 4).unwrap();
    assert!(check_bimonoid(&b).unwrap().passed());
    for (_, rep) in coassoc_sweep(&b, 4).unwrap() {
        assert!(rep.passed());
    }
}
