//! Transform, carrier and multiplexer properties against a direct
//! evaluation of V_k = Σ v_i α^{ik}.

use gdm::carriers::CarrierSet;
use gdm::finite_field::default_params;
use gdm::gdm_mux::GdmError;
use gdm::{FieldElement, GaloisField, Gdm, GdmConfig, Spectrum, TimeVector, TransformPlan, UserFrame};
use proptest::prelude::*;

/// Direct O(N^2) transform using only field `pow`, `mul` and `add`.
fn naive_ffft(f: &GaloisField, kernel: FieldElement, v: &[FieldElement]) -> Vec<FieldElement> {
    let n = v.len() as i64;
    (0..n)
        .map(|k| {
            v.iter().enumerate().fold(FieldElement::Zero, |acc, (i, &vi)| {
                f.add(acc, f.mul(vi, f.pow(kernel, i as i64 * k).unwrap()))
            })
        })
        .collect()
}

fn gf256() -> GaloisField {
    GaloisField::new(default_params(2, 8).unwrap()).unwrap()
}

fn gf9() -> GaloisField {
    GaloisField::new(default_params(3, 2).unwrap()).unwrap()
}

fn elements(f: &GaloisField, n: usize) -> impl Strategy<Value = Vec<FieldElement>> {
    let f = f.clone();
    proptest::collection::vec(0..f.order(), n).prop_map(move |xs| xs.into_iter().map(|x| f.from_packed(x)).collect())
}

proptest! {
    #[test]
    fn ffft_matches_direct_sum(v in elements(&gf256(), 51)) {
        let f = gf256();
        let plan = TransformPlan::new(&f, 51).unwrap();
        let got = plan.ffft(&TimeVector(v.clone())).unwrap();
        prop_assert_eq!(got.0, naive_ffft(&f, plan.kernel(), &v));
    }

    #[test]
    fn ffft_inverse_round_trip(v in elements(&gf256(), 255)) {
        let plan = TransformPlan::new(&gf256(), 255).unwrap();
        let v = TimeVector(v);
        prop_assert_eq!(plan.iffft(&plan.ffft(&v).unwrap()).unwrap(), v);
    }

    #[test]
    fn ffft_is_linear(u in elements(&gf9(), 8), v in elements(&gf9(), 8), c in 0u32..9) {
        let f = gf9();
        let plan = TransformPlan::new(&f, 8).unwrap();
        let c = f.from_packed(c);
        let combo: Vec<_> = u.iter().zip(&v).map(|(&a, &b)| f.add(f.mul(c, a), b)).collect();
        let lhs = plan.ffft(&TimeVector(combo)).unwrap();
        let (fu, fv) = (plan.ffft(&TimeVector(u)).unwrap(), plan.ffft(&TimeVector(v)).unwrap());
        let rhs: Vec<_> = fu.iter().zip(fv.iter()).map(|(&a, &b)| f.add(f.mul(c, a), b)).collect();
        prop_assert_eq!(lhs.0, rhs);
    }

    #[test]
    fn base_field_vectors_have_valid_spectra(digits in proptest::collection::vec(0u32..3, 8)) {
        let f = gf9();
        let plan = TransformPlan::new(&f, 8).unwrap();
        let s = plan.ffft(&TimeVector::from_base(&f, &digits)).unwrap();
        prop_assert!(plan.is_valid_base_field_spectrum(&s).unwrap());
        for k in 0..8 {
            prop_assert_eq!(f.frobenius(s[k]), s[(3 * k) % 8]);
        }
    }

    #[test]
    fn gdm_identity_gf256(bits in proptest::collection::vec(0u32..2, 255)) {
        let f = gf256();
        let g = Gdm::with_field(GdmConfig::new(f.params().clone(), 255), f).unwrap();
        let frame = UserFrame(bits);
        let c = g.compress(&g.multiplex(&frame).unwrap()).unwrap();
        prop_assert_eq!(c.leader_values().len(), 35);
        prop_assert_eq!(g.demultiplex(&g.decompress(&c).unwrap()).unwrap(), frame);
    }

    #[test]
    fn gdm_identity_shortened_gf9(digits in proptest::collection::vec(0u32..3, 4)) {
        let f = gf9();
        let g = Gdm::with_field(GdmConfig::new(f.params().clone(), 4), f).unwrap();
        let frame = UserFrame(digits);
        let c = g.compress(&g.multiplex(&frame).unwrap()).unwrap();
        prop_assert_eq!(g.demultiplex(&g.decompress(&c).unwrap()).unwrap(), frame);
    }
}

#[test]
fn delta_maps_to_carrier_row() {
    let f = GaloisField::gf16();
    let plan = TransformPlan::new(&f, 15).unwrap();
    let set = CarrierSet::new(plan.clone());
    for i in 0..15 {
        assert_eq!(plan.ffft(&TimeVector::delta(15, i)).unwrap().0, set.carrier(i).unwrap());
    }
}

#[test]
fn spreading_all_users_equals_multiplexing() {
    let f = GaloisField::gf16();
    let g = Gdm::new(GdmConfig::new(f.params().clone(), 15)).unwrap();
    let set = CarrierSet::new(g.plan().clone());
    let frame = UserFrame(vec![1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1]);
    let symbols: Vec<_> = frame.0.iter().map(|&d| f.from_base(d as u64)).collect();
    assert_eq!(set.spread_all(&symbols).unwrap(), g.multiplex(&frame).unwrap().0);
}

#[test]
fn correlation_is_scaled_identity_in_odd_characteristic() {
    let f = gf9();
    let set = CarrierSet::new(TransformPlan::new(&f, 8).unwrap());
    let m = set.correlation_matrix();
    let n = f.embed_integer(8);
    for (i, row) in m.iter().enumerate() {
        for (t, &r) in row.iter().enumerate() {
            assert_eq!(r, if i == t { n } else { FieldElement::Zero });
        }
    }
}

#[test]
fn demultiplex_rejects_extension_valued_result() {
    let g = Gdm::new(GdmConfig::new(gdm::FieldParams::gf16(), 15)).unwrap();
    let mut s = g.multiplex(&UserFrame(vec![1; 15])).unwrap();
    s.0[1] = FieldElement::Pow(1);
    assert!(matches!(g.demultiplex(&s), Err(GdmError::NonBaseFieldResult { .. })));
    assert!(matches!(g.compress(&s), Err(GdmError::InvalidSpectrum { .. })));
    assert!(matches!(
        g.demultiplex(&Spectrum(vec![FieldElement::ONE; 3])),
        Err(GdmError::LengthMismatch { .. }) | Err(GdmError::Transform(_))
    ));
}

#[test]
fn lengths_not_dividing_the_group_are_rejected() {
    let f = GaloisField::gf16();
    assert!(TransformPlan::new(&f, 7).is_err());
    assert!(Gdm::new(GdmConfig::new(f.params().clone(), 4)).is_err());
}
