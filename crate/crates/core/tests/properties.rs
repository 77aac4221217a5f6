use mixcode::additive_code::inner_product;
use mixcode::chain_ring::{mixed_scalar_mul, ring_arith, RingOp};
use mixcode::weight_enum::{
    complete_enumerator, hamming_enumerator, hamming_from_complete, hamming_transform,
    lee_enumerator, lee_from_symmetrized, lee_transform, symmetrized_enumerator,
    symmetrized_transform,
};
use mixcode::{AdditiveCode, BlockProfile, ChainElement, GrayContext, LinearCode, MixedWord, Prime};
use proptest::prelude::*;

fn word(p: u32, prof: BlockProfile, raw: &[u32]) -> MixedWord {
    let v: Vec<u32> = raw.iter().take(prof.len()).map(|x| x % p).collect();
    MixedWord::unflatten(&v, prof).unwrap()
}

fn code(p: u32, n: usize, gens: &[Vec<u32>]) -> AdditiveCode {
    let prof = BlockProfile::new(p, n, n, n).unwrap();
    let words: Vec<MixedWord> = gens.iter().map(|g| word(p, prof, g)).collect();
    AdditiveCode::span_closure(prof, &words).unwrap()
}

fn gens_strategy() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..13, 12), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn enumerators_agree_and_transform(n in 1usize..=2, gens in gens_strategy()) {
        let c = code(2, n, &gens);
        let d = c.dual();
        let size = c.size().unwrap() as i128;
        let p = c.profile().p();

        let cwe = complete_enumerator(&c).unwrap();
        let ham = hamming_enumerator(&c).unwrap();
        let sym = symmetrized_enumerator(&c).unwrap();
        let lee = lee_enumerator(&c).unwrap();
        for w in [&cwe, &ham, &sym, &lee] {
            prop_assert_eq!(w.eval_at_ones(), size);
        }
        prop_assert_eq!(&hamming_from_complete(&cwe).unwrap(), &ham);
        prop_assert_eq!(&lee_from_symmetrized(&sym).unwrap(), &lee);

        prop_assert_eq!(hamming_transform(&ham, size, p).unwrap(), hamming_enumerator(&d).unwrap());
        prop_assert_eq!(symmetrized_transform(&sym, size, p).unwrap(), symmetrized_enumerator(&d).unwrap());
        prop_assert_eq!(lee_transform(&lee, size, p).unwrap(), lee_enumerator(&d).unwrap());
    }

    #[test]
    fn transforms_at_three(gens in prop::collection::vec(prop::collection::vec(0u32..3, 6), 1..3)) {
        let c = code(3, 1, &gens);
        let d = c.dual();
        let size = c.size().unwrap() as i128;
        let p = c.profile().p();
        let ham = hamming_enumerator(&c).unwrap();
        prop_assert_eq!(hamming_transform(&ham, size, p).unwrap(), hamming_enumerator(&d).unwrap());
        let lee = lee_enumerator(&c).unwrap();
        prop_assert_eq!(lee_transform(&lee, size, p).unwrap(), lee_enumerator(&d).unwrap());
        let sym = symmetrized_enumerator(&c).unwrap();
        prop_assert_eq!(symmetrized_transform(&sym, size, p).unwrap(), symmetrized_enumerator(&d).unwrap());
    }

    #[test]
    fn gray_map_is_an_isometry(p in prop::sample::select(vec![2u32, 3, 5, 13]), a in prop::collection::vec(0u32..13, 6), b in prop::collection::vec(0u32..13, 6)) {
        let prime = Prime::new(p).unwrap();
        let Ok(gray) = GrayContext::new(prime) else {
            return Ok(());
        };
        let prof = BlockProfile::new(p, 0, 1, 1).unwrap();
        let (v, w) = (word(p, prof, &a), word(p, prof, &b));
        let diff: Vec<u32> = v.flatten().iter().zip(w.flatten()).map(|(x, y)| prime.sub(*x, y)).collect();
        let diff = MixedWord::unflatten(&diff, prof).unwrap();
        let (gv, gw) = (gray.phi_word(&v).unwrap(), gray.phi_word(&w).unwrap());
        let dist = gv.iter().zip(&gw).filter(|(x, y)| x != y).count();
        prop_assert_eq!(mixcode::gray::lee_weight(&diff), dist);
    }

    #[test]
    fn form_is_s_bilinear(coeffs in prop::collection::vec(0u32..2, 3), a in prop::collection::vec(0u32..2, 6), b in prop::collection::vec(0u32..2, 6)) {
        let p = Prime::new(2).unwrap();
        let prof = BlockProfile::new(2, 1, 1, 1).unwrap();
        let d = ChainElement::new(p, &coeffs).unwrap();
        let (v, w) = (word(2, prof, &a), word(2, prof, &b));
        let lhs = inner_product(&v, &mixed_scalar_mul(&d, &w).unwrap()).unwrap();
        let rhs = ring_arith(&d, &inner_product(&v, &w).unwrap(), RingOp::Mul).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn min_distance_respects_singleton(p in prop::sample::select(vec![2u32, 3, 7]), n in 2usize..12, rows in prop::collection::vec(prop::collection::vec(0u32..7, 12), 1..5)) {
        let prime = Prime::new(p).unwrap();
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r[..n].iter().map(|x| x % p).collect()).collect();
        let c = LinearCode::new(prime, n, &rows).unwrap();
        prop_assume!(c.dimension() > 0);
        let d = c.min_distance(n).unwrap();
        prop_assert!(d >= 1 && d <= n - c.dimension() + 1);
        prop_assert_eq!(d, c.min_weight_by_enumeration());
    }
}
