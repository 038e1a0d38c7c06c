use bihom_core::coherence::BiHomObject;
use bihom_core::exactlin::{DenseMap, Field};
use bihom_core::fixtures::{c3_classical, c3_squared_plain, c3_twisted, cyclic_group_algebra, f7, idempotent_bialgebra, power_map};
use bihom_core::structures::*;
use bihom_core::twist::*;
use bihom_core::Error;
use proptest::prelude::*;

fn same_maps_on(object: BiHomObject, b: &StructureBundle) -> StructureBundle {
    StructureBundle::new(object, b.mu().cloned(), b.eta().cloned(), b.delta().cloned(), b.epsilon().cloned()).unwrap()
}

#[test]
fn gamma_maps() {
    let f = f7();
    let id = BiHomObject::trivial(f, 3);
    for n in 0..=4 {
        assert!(gamma_map(&id, n).unwrap().is_identity());
    }
    let a = power_map(f, 3, 2).unwrap();
    let b = power_map(f, 3, 0).unwrap();
    let x = BiHomObject::new(a.clone(), b.clone()).unwrap();
    assert_eq!(gamma_map(&x, 2).unwrap(), a.kron(&b).unwrap());
    let ab = a.compose(&b).unwrap();
    let expected = DenseMap::kron_all(f, [&a.pow(2).unwrap(), &ab, &b.pow(2).unwrap()]).unwrap();
    assert_eq!(gamma_map(&x, 3).unwrap(), expected);
}

#[test]
fn twist_with_identities_is_identity() {
    let b = c3_classical().unwrap();
    let p = PlainStructure::new(b.clone()).unwrap();
    for d in [Direction::Comonoid, Direction::Monoid, Direction::Bimonoid] {
        assert_eq!(yau_twist(&p, d).unwrap(), b);
    }
}

#[test]
fn twisted_c3_passes_every_check() {
    let p = c3_squared_plain().unwrap();
    assert!(check_comonoid(&yau_twist(&p, Direction::Comonoid).unwrap()).unwrap().passed());
    assert!(check_monoid(&yau_twist(&p, Direction::Monoid).unwrap()).unwrap().passed());
    let b = yau_twist(&p, Direction::Bimonoid).unwrap();
    let rep = check_bimonoid(&b).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(b, c3_twisted().unwrap());
}

#[test]
fn non_morphism_endomorphism_is_rejected() {
    let f = f7();
    let scale = DenseMap::diagonal(f, &[f.from_i64(2), f.one(), f.one()]).unwrap();
    let obj = BiHomObject::new(scale, DenseMap::identity(f, 3)).unwrap();
    let b = same_maps_on(obj, &c3_classical().unwrap());
    assert!(matches!(PlainStructure::new(b), Err(Error::InvariantViolation(_))));
}

#[test]
fn untwist_round_trips() {
    let p = c3_squared_plain().unwrap();
    let t = yau_twist(&p, Direction::Bimonoid).unwrap();
    let back = untwist(&t).unwrap();
    assert_eq!(back, p);
    assert_eq!(yau_twist(&back, Direction::Bimonoid).unwrap(), t);
    let classical = same_maps_on(BiHomObject::trivial(f7(), 3), back.bundle());
    assert!(check_bimonoid(&classical).unwrap().passed());
}

#[test]
fn untwist_needs_invertible_endomorphisms() {
    let f = f7();
    let id = DenseMap::identity(f, 3);
    let obj = BiHomObject::with_four(id.clone(), id.clone(), DenseMap::zero(f, 3, 3), id).unwrap();
    let b = same_maps_on(obj, &c3_classical().unwrap());
    assert_eq!(untwist(&b), Err(Error::NotInvertible("kappa")));
    assert_eq!(antipode_solve(&b, AntipodeMethod::ViaUntwist), Err(Error::NotInvertible("kappa")));
}

// Brute force over every map of basis vectors C3 -> C3: group elements are
// exponents mod 3, `s` the endomorphism exponent factor, and the twisted
// structure has mu(x, y) = s x + s y, delta(g) = (s g, s g).
fn brute_force_antipodes(twist: usize) -> Vec<[usize; 3]> {
    let s = |x: usize| twist * x % 3;
    let mu = |x: usize, y: usize| (s(x) + s(y)) % 3;
    let w = |x: usize| s(s(x));
    let mut found = Vec::new();
    for code in 0..27 {
        let chi = [code % 3, code / 3 % 3, code / 9];
        let ok = (0..3).all(|g| {
            let h = s(g);
            mu(w(h), w(chi[h])) == 0 && mu(w(chi[h]), w(h)) == 0
        });
        if ok {
            found.push(chi);
        }
    }
    found
}

#[test]
fn classical_c3_antipode_is_inversion() {
    assert_eq!(brute_force_antipodes(1), vec![[0, 2, 1]]);
    let b = c3_classical().unwrap();
    let r = antipode_solve(&b, AntipodeMethod::Direct).unwrap();
    assert_eq!(r.verdict, AntipodeVerdict::Unique);
    assert_eq!(r.chi.unwrap(), DenseMap::from_basis_images(f7(), 3, &[0, 2, 1]).unwrap());
    assert!(r.both_sided);
}

#[test]
fn twisted_c3_antipode_both_methods() {
    let oracle = brute_force_antipodes(2);
    assert_eq!(oracle, vec![[0, 2, 1]]);
    let expected = DenseMap::from_basis_images(f7(), 3, &oracle[0]).unwrap();
    assert_eq!(expected, power_map(f7(), 3, 2).unwrap());
    let b = c3_twisted().unwrap();
    for m in [AntipodeMethod::Direct, AntipodeMethod::ViaUntwist] {
        let r = antipode_solve(&b, m).unwrap();
        assert_eq!(r.method, m);
        assert_eq!(r.verdict, AntipodeVerdict::Unique);
        assert!(r.both_sided);
        let chi = r.chi.unwrap();
        assert_eq!(chi, expected);
        assert!(check_antipode(&b, &chi).unwrap().passed());
    }
}

#[test]
fn non_hopf_fixture() {
    let b = idempotent_bialgebra(f7()).unwrap();
    assert!(check_bimonoid(&b).unwrap().passed());
    for m in [AntipodeMethod::Direct, AntipodeMethod::ViaUntwist] {
        let r = antipode_solve(&b, m).unwrap();
        assert_eq!(r.verdict, AntipodeVerdict::NoAntipode);
        assert!(r.chi.is_none() && !r.both_sided);
    }
    let (m, inv) = canonical_morphism(&ModuleInst::regular(&b).unwrap(), &BiHomObject::unit(f7()), &b).unwrap();
    assert!(!inv);
    assert_eq!(m.dst_dim(), 4);
}

#[test]
fn underdetermined_antipode_reports_witness() {
    let f = f7();
    let obj = BiHomObject::trivial(f, 2);
    let b = StructureBundle::new(
        obj,
        Some(DenseMap::zero(f, 2, 4)),
        Some(DenseMap::zero(f, 2, 1)),
        Some(DenseMap::zero(f, 4, 2)),
        Some(DenseMap::zero(f, 1, 2)),
    )
    .unwrap();
    let r = antipode_solve(&b, AntipodeMethod::Direct).unwrap();
    assert_eq!(r.verdict, AntipodeVerdict::NonUnique);
    assert!(r.chi.unwrap().is_zero());
    assert!(r.both_sided);
}

#[test]
fn canonical_morphisms() {
    let f = f7();
    let b = c3_twisted().unwrap();
    let (m, inv) = canonical_morphism(&ModuleInst::regular(&b).unwrap(), &BiHomObject::unit(f), &b).unwrap();
    assert!(inv);
    assert_eq!(m.dst_dim(), 9);
    let (_, inv) = canonical_morphism(&ModuleInst::regular(&b).unwrap(), &BiHomObject::trivial(f, 2), &b).unwrap();
    assert!(inv);
    let one = cyclic_group_algebra(f, 1).unwrap();
    let (m, inv) = canonical_morphism(&ModuleInst::regular(&one).unwrap(), &BiHomObject::unit(f), &one).unwrap();
    assert!(m.is_identity() && inv);
    let other = c3_classical().unwrap();
    assert_eq!(
        canonical_morphism(&ModuleInst::regular(&other).unwrap(), &BiHomObject::unit(f), &b),
        Err(Error::MixedStructures)
    );
}

fn twisted_cyclic(field: Field, order: usize, e: [usize; 4]) -> (PlainStructure, StructureBundle) {
    let m: Vec<DenseMap> = e.iter().map(|&x| power_map(field, order, x).unwrap()).collect();
    let obj = BiHomObject::with_four(m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone()).unwrap();
    let plain = PlainStructure::new(same_maps_on(obj, &cyclic_group_algebra(field, order).unwrap())).unwrap();
    let t = yau_twist(&plain, Direction::Bimonoid).unwrap();
    (plain, t)
}

fn coprime(a: usize, b: usize) -> bool {
    num_integer::gcd(a, b) == 1
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::RATIONALS), Just(f7()), Just(Field::prime(5).unwrap())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn twists_of_cyclic_group_algebras(field in field_strategy(), order in 2usize..=4, e in prop::array::uniform4(0usize..4)) {
        let e = e.map(|x| x % order);
        let (plain, t) = twisted_cyclic(field, order, e);
        let rep = check_bimonoid(&t).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep);
        for n in 0..=4 {
            prop_assert_eq!(delta_n(&t, n, Variant::Iterative).unwrap(), delta_n(&t, n, Variant::Alternative).unwrap());
            prop_assert_eq!(mu_n(&t, n, Variant::Iterative).unwrap(), mu_n(&t, n, Variant::Alternative).unwrap());
        }
        for (_, r) in coassoc_sweep(&t, 3).unwrap() { prop_assert!(r.passed()); }
        for (_, r) in assoc_sweep(&t, 3).unwrap() { prop_assert!(r.passed()); }
        let reg = ModuleInst::regular(&t).unwrap();
        prop_assert!(check_module(&induced_module_action(&t, &[reg.clone(), reg]).unwrap()).unwrap().passed());
        prop_assert!(check_hopf_module(&HopfModuleInst::regular(&t).unwrap()).unwrap().passed());

        let direct = antipode_solve(&t, AntipodeMethod::Direct).unwrap();
        prop_assert!(direct.chi.as_ref().is_none_or(|c| check_antipode(&t, c).unwrap().passed() == direct.both_sided));
        if e.iter().all(|&x| coprime(x, order)) {
            prop_assert_eq!(&untwist(&t).unwrap(), &plain);
            let via = antipode_solve(&t, AntipodeMethod::ViaUntwist).unwrap();
            prop_assert_eq!(direct.verdict, AntipodeVerdict::Unique);
            prop_assert_eq!(&direct.chi, &via.chi);
            prop_assert!(direct.both_sided && via.both_sided);
            let (_, inv) = canonical_morphism(&ModuleInst::regular(&t).unwrap(), &BiHomObject::unit(field), &t).unwrap();
            prop_assert!(inv);
        }
    }
}
