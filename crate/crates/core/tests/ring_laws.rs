mod common;

use common::{group, ring};
use nodal_conics::burnside::BurnsideElement;
use proptest::prelude::*;

fn coeffs(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, n)
}

proptest! {
    #[test]
    fn d8_ring_laws(x in coeffs(8), y in coeffs(8), z in coeffs(8)) {
        let r = ring(&group(&["(1234)", "(13)"]));
        prop_assert_eq!(r.rank(), 8);
        let (x, y, z) = (
            BurnsideElement::from_coeffs(&r, x),
            BurnsideElement::from_coeffs(&r, y),
            BurnsideElement::from_coeffs(&r, z),
        );
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(x.mul(&BurnsideElement::one(&r)).unwrap(), x.clone());
        for k in 0..r.rank() {
            prop_assert_eq!(x.mul(&y).unwrap().marks(k).unwrap(), x.marks(k).unwrap() * y.marks(k).unwrap());
        }
    }

    #[test]
    fn s4_marks_round_trip(x in coeffs(11)) {
        let r = ring(&group(&["(1234)", "(12)"]));
        let e = BurnsideElement::from_coeffs(&r, x);
        prop_assert_eq!(BurnsideElement::from_marks(&r, &e.mark_vector()).unwrap(), e);
    }
}
