//! Galois-Fourier spreading carriers.
//!
//! User `i` is assigned the carrier `(α^{ik})_{k=0..N-1}`, row `i` of the
//! transform matrix. Correlation is taken in the field:
//! `R(i, t) = Σ_k α^{ik} α^{-tk}`, which is the image of N when `i = t`
//! and zero otherwise.

use crate::ffft::TransformPlan;
use crate::finite_field::FieldElement;

/// Above this length carriers are generated on demand instead of stored.
pub const MATERIALIZE_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CarrierError {
    #[error("carrier index {index} out of range for {n} carriers")]
    IndexOutOfRange { index: usize, n: usize },
}

#[derive(Clone, Debug)]
pub struct CarrierSet {
    plan: TransformPlan,
    /// Row-major N×N matrix of α^{ik}, present when N ≤ MATERIALIZE_LIMIT.
    matrix: Option<Vec<FieldElement>>,
}

impl CarrierSet {
    pub fn new(plan: TransformPlan) -> Self {
        let n = plan.len();
        let matrix = (n <= MATERIALIZE_LIMIT).then(|| {
            (0..n)
                .flat_map(|i| (0..n).map(move |k| (i, k)))
                .map(|(i, k)| plan.kernel_powers()[i * k % n])
                .collect()
        });
        Self { plan, matrix }
    }

    pub fn plan(&self) -> &TransformPlan {
        &self.plan
    }

    /// Number of carriers (and users), N.
    pub fn len(&self) -> usize {
        self.plan.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plan.is_empty()
    }

    pub fn is_materialized(&self) -> bool {
        self.matrix.is_some()
    }

    fn check(&self, i: usize) -> Result<(), CarrierError> {
        if i >= self.len() {
            return Err(CarrierError::IndexOutOfRange {
                index: i,
                n: self.len(),
            });
        }
        Ok(())
    }

    /// Carrier of user `i`: `(α^{i·0}, α^{i·1}, …, α^{i(N-1)})`.
    pub fn carrier(&self, i: usize) -> Result<Vec<FieldElement>, CarrierError> {
        self.check(i)?;
        let n = self.len();
        Ok(match &self.matrix {
            Some(m) => m[i * n..(i + 1) * n].to_vec(),
            None => (0..n).map(|k| self.plan.kernel_powers()[i * k % n]).collect(),
        })
    }

    /// `R(i, t) = Σ_k α^{ik} α^{-tk}`, summed directly in the field.
    pub fn correlation(&self, i: usize, t: usize) -> Result<FieldElement, CarrierError> {
        self.check(i)?;
        self.check(t)?;
        let field = self.plan.field();
        let n = self.len() as i64;
        let sum = (0..n).fold(FieldElement::Zero, |acc, k| {
            let conj = self.plan.kernel_pow(-(t as i64) * k);
            field.add(acc, field.mul(self.plan.kernel_pow(i as i64 * k), conj))
        });
        Ok(sum)
    }

    /// Row-major N×N matrix of `correlation(i, t)`.
    pub fn correlation_matrix(&self) -> Vec<Vec<FieldElement>> {
        let n = self.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|t| self.correlation(i, t).expect("indices in range"))
                    .collect()
            })
            .collect()
    }

    /// User `i`'s spread vector `(symbol · α^{ik})_k`.
    pub fn spread_user(&self, i: usize, symbol: FieldElement) -> Result<Vec<FieldElement>, CarrierError> {
        let field = self.plan.field();
        Ok(self.carrier(i)?.into_iter().map(|c| field.mul(symbol, c)).collect())
    }

    /// Componentwise sum of every user's spread vector.
    pub fn spread_all(&self, symbols: &[FieldElement]) -> Result<Vec<FieldElement>, CarrierError> {
        let field = self.plan.field();
        let mut acc = vec![FieldElement::Zero; self.len()];
        for (i, &s) in symbols.iter().enumerate() {
            for (slot, x) in acc.iter_mut().zip(self.spread_user(i, s)?) {
                *slot = field.add(*slot, x);
            }
        }
        Ok(acc)
    }
}
