mod oracle;

use proptest::prelude::*;

use aicrystal::kmatrix::{is_ai_tableau, k1, std};
use aicrystal::rsai::{ot_to_q, q_to_ot, rs_ai, rs_ai_inverse};
use aicrystal::tableau::{p_symbol, rs, rs_inverse};
use aicrystal::{AiCrystal, GlCrystal, Word};

fn words() -> impl Strategy<Value = Word> {
    (3u32..=7).prop_flat_map(|n| prop::collection::vec(1..=n, 0..=7).prop_map(move |l| Word::new(n, l).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rs_round_trip(w in words()) {
        let (p, q) = rs(&w);
        prop_assert_eq!(rs_inverse(&p, &q).unwrap(), w);
    }

    #[test]
    fn rs_ai_round_trip(w in words()) {
        let (p, ot) = rs_ai(&w).unwrap();
        prop_assert!(is_ai_tableau(&p));
        prop_assert_eq!(&p.shape(), ot.shape());
        prop_assert_eq!(q_to_ot(w.n(), &ot_to_q(&ot).unwrap()).unwrap(), ot.clone());
        prop_assert_eq!(rs_ai_inverse(&p, &ot).unwrap(), w);
    }

    #[test]
    fn rs_ai_intertwines_btil(w in words(), i in 1u32..7) {
        prop_assume!(i < w.n());
        let (p, ot) = rs_ai(&w).unwrap();
        let moved = w.btil(i).map(|x| rs_ai(&x).unwrap());
        prop_assert_eq!(moved, p.btil(i).map(|q| (q, ot)));
    }

    #[test]
    fn ai_axioms_on_words(w in words(), i in 1u32..7, j in 1u32..7) {
        prop_assume!(i < w.n() && j < w.n());
        match w.btil(i) {
            None => prop_assert_eq!(w.deg(i), 0),
            Some(b) => {
                prop_assert_eq!(b.btil(i), Some(w.clone()));
                prop_assert_eq!(b.deg(i), w.deg(i));
                let diff = b.deg(j) as i64 - w.deg(j) as i64;
                if i.abs_diff(j) == 1 {
                    prop_assert_eq!(diff.abs(), 1);
                } else if i.abs_diff(j) > 1 {
                    prop_assert_eq!(diff, 0);
                }
            }
        }
        prop_assert_eq!(w.deg(i), oracle::ai_deg(w.letters(), i));
    }

    #[test]
    fn gl_operators_on_words(w in words(), i in 1u32..7) {
        prop_assume!(i < w.n());
        let f = w.ftil(i);
        prop_assert_eq!(f.as_ref().map(|x| x.letters().to_vec()), oracle::tensor_ftil(w.letters(), i));
        if let Some(f) = f {
            prop_assert_eq!(f.etil(i), Some(w.clone()));
            prop_assert_eq!(p_symbol(&f), p_symbol(&w).ftil(i).unwrap());
        }
    }

    #[test]
    fn k1_and_std(w in words()) {
        let p = p_symbol(&w);
        let k = k1(&p).unwrap();
        prop_assert_eq!(k.rows().to_vec(), oracle::k1(&p.rows().to_vec(), w.n()));
        let s = std(&p).unwrap();
        prop_assert!(is_ai_tableau(&s));
        for i in 1..w.n() {
            prop_assert_eq!(s.deg(i), p.deg(i));
        }
    }
}
