use bihom_core::combinat::{
    bar, flip_map, flip_perm, hat_of, pad, pad_flat, tilde_of, totals, z_of, DoubleSeq, IndexSeq, Permutation,
};
use bihom_core::exactlin::{DenseMap, Field};
use proptest::prelude::*;

fn double_seq() -> impl Strategy<Value = DoubleSeq> {
    prop::collection::vec(prop::collection::vec(0usize..=4, 0..=3), 0..=4).prop_map(DoubleSeq::from_rows)
}

// tau_np . (tau_{n k_1} + ... + tau_{n k_p}) = tau_{n, sum k}, with tau_np moving
// blocks whose size at input position (i, j) is k_i.
fn third_tau_identity(n: usize, ks: &[usize]) -> bool {
    let p = ks.len();
    let inner = Permutation::concat(&ks.iter().map(|&k| flip_perm(n, k)).collect::<Vec<_>>());
    let sizes: Vec<usize> = (0..p).flat_map(|i| std::iter::repeat_n(ks[i], n)).collect();
    let outer = flip_perm(n, p).lift(&sizes).unwrap();
    outer.compose(&inner).unwrap() == flip_perm(n, ks.iter().sum())
}

#[test]
fn tau_identities_exhaustive() {
    for n in 0..=4 {
        assert!(flip_perm(n, 1).is_identity());
        for p in 0..=4 {
            assert!(flip_perm(n, p).compose(&flip_perm(p, n)).unwrap().is_identity(), "n={n} p={p}");
        }
    }
    for n in 0..=4 {
        for p in 0..=4usize {
            let mut ks = vec![0; p];
            loop {
                assert!(third_tau_identity(n, &ks), "n={n} k={ks:?}");
                let Some(pos) = ks.iter().position(|&k| k < 4) else { break };
                ks[pos] += 1;
                ks[..pos].iter_mut().for_each(|k| *k = 0);
            }
        }
    }
}

#[test]
fn tau_as_dense_maps() {
    let f = Field::prime(7).unwrap();
    let dims_np = vec![vec![2, 1, 3], vec![1, 2, 2]];
    let dims_pn: Vec<Vec<usize>> = (0..3).map(|j| (0..2).map(|i| dims_np[i][j]).collect()).collect();
    let a = flip_map(3, 2, f, &dims_np).unwrap();
    let b = flip_map(2, 3, f, &dims_pn).unwrap();
    assert!(b.compose(&a).unwrap().is_identity());
    assert!(a.compose(&b).unwrap().is_identity());
    assert!(flip_map(3, 1, f, &[vec![2, 2, 3]]).unwrap().is_identity());
}

#[test]
fn middle_swap_on_four_slots() {
    let f = Field::RATIONALS;
    let m = flip_map(2, 2, f, &[vec![2, 2], vec![2, 2]]).unwrap();
    // Oracle: e_a (x) e_b (x) e_c (x) e_d  |->  e_a (x) e_c (x) e_b (x) e_d.
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    let src = ((a * 2 + b) * 2 + c) * 2 + d;
                    let dst = ((a * 2 + c) * 2 + b) * 2 + d;
                    assert!(m.get(dst, src).is_one());
                }
            }
        }
    }
}

#[test]
fn paper_sequence_examples() {
    assert_eq!(z_of(0), 1);
    assert_eq!((z_of(3), bar(3), bar(0)), (0, 3, 1));
    let t = totals(&DoubleSeq::from_rows(vec![vec![0, 3], vec![]]));
    assert_eq!(t.tilde_z, t.z + t.row_k.iter().zip(&t.row_z).map(|(k, z)| z_of(k + z)).sum::<usize>());
    assert_eq!(t.tilde_z, 2);
    let t = totals(&DoubleSeq::from_rows(vec![vec![1, 1]]));
    assert_eq!((t.k, t.z, t.tilde_z), (2, 0, 0));
}

fn rand_map(field: Field, dst: usize, src: usize, vals: &[i64]) -> DenseMap {
    DenseMap::from_i64(field, dst, src, &vals[..dst * src]).unwrap()
}

proptest! {
    #[test]
    fn derived_sequence_sums(d in double_seq()) {
        let t = totals(&d);
        let weight = |s: &DoubleSeq| s.rows().iter().flat_map(|r| r.items()).map(|&k| k + z_of(k)).sum::<usize>();
        prop_assert_eq!(weight(&hat_of(&d)), t.k + t.tilde_z);
        prop_assert_eq!(weight(&tilde_of(&d)), t.k + t.tilde_z);
        let alt: usize = t.z + t.row_k.iter().zip(&t.row_z).map(|(k, z)| z_of(k + z)).sum::<usize>();
        prop_assert_eq!(t.tilde_z, alt);
        for (i, row) in d.rows().iter().enumerate() {
            prop_assert_eq!(tilde_of(&d).rows()[i].len(), bar(row.len()));
            prop_assert_eq!(hat_of(&d).rows()[i].len(), bar(row.len()));
        }
    }

    #[test]
    fn m_plus_z_bounds(k in prop::collection::vec(0usize..=4, 0..=6)) {
        let k = IndexSeq(k);
        prop_assert!(k.total() + k.zeros() >= k.len());
        prop_assert_eq!(k.total() + k.zeros() == 0, k.is_empty());
    }

    #[test]
    fn padding_absorbs_left(k in prop::collection::vec(0usize..=4, 0..=5)) {
        let k = IndexSeq(k);
        let objs: Vec<u32> = (1..=k.total() as u32).collect();
        let once = pad_flat(&objs, &k, &0).unwrap();
        let twice = pad_flat(&once, &IndexSeq(vec![k.total() + k.zeros()]), &0).unwrap();
        let tilde = tilde_of(&DoubleSeq(vec![k.clone()])).rows()[0].clone();
        prop_assert_eq!(twice, pad_flat(&objs, &tilde, &0).unwrap());
    }

    #[test]
    fn padding_absorbs_right(k in prop::collection::vec(0usize..=4, 0..=5)) {
        let k = IndexSeq(k);
        let objs: Vec<u32> = (1..=k.total() as u32).collect();
        let d = DoubleSeq(vec![k.clone()]);
        let hat = hat_of(&d).rows()[0].clone();
        let tilde = tilde_of(&d).rows()[0].clone();
        let lhs = pad_flat(&pad_flat(&objs, &IndexSeq(vec![k.total()]), &0).unwrap(), &hat, &0).unwrap();
        prop_assert_eq!(lhs, pad_flat(&objs, &tilde, &0).unwrap());
    }

    #[test]
    fn pad_counts(k in prop::collection::vec(0usize..=3, 0..=5)) {
        let k = IndexSeq(k);
        let slots: Vec<Vec<u8>> = k.items().iter().map(|&n| vec![1; n]).collect();
        prop_assert_eq!(pad(&slots, &k, &0).unwrap().len(), k.total() + k.zeros());
    }

    // A factor permutation P is characterised by P.(f_0 (x) ... ) = (f_{s(0)} (x) ...).P.
    #[test]
    fn permutation_matrix_is_natural(
        perm in Just((0..3usize).collect::<Vec<_>>()).prop_shuffle(),
        dims in prop::collection::vec(1usize..=2, 3),
        vals in prop::collection::vec(-3i64..=3, 12),
    ) {
        let f = Field::RATIONALS;
        let p = Permutation::new(perm).unwrap();
        let pm = p.to_dense_map(f, &dims).unwrap();
        let maps: Vec<DenseMap> = (0..3).map(|i| rand_map(f, dims[i], dims[i], &vals[i * 4..])).collect();
        let moved = p.apply(&maps).unwrap();
        let lhs = pm.compose(&DenseMap::kron_all(f, &maps).unwrap()).unwrap();
        let rhs = DenseMap::kron_all(f, &moved).unwrap().compose(&pm).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(pm.invert().unwrap(), Some(pm.transpose()));
    }

    #[test]
    fn lift_of_identity_is_identity(sizes in prop::collection::vec(0usize..=3, 0..=5)) {
        prop_assert!(Permutation::identity(sizes.len()).lift(&sizes).unwrap().is_identity());
    }
}
