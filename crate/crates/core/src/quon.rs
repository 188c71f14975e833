//! n-quons in quantum coordinates: complex tensors indexed by `Irr^n`.
//!
//! The coefficient at `(x₁, …, xₙ)` multiplies `|x₁…xₙ⟩ = β_{x₁}⊗…⊗β_{xₙ}`.

use ndarray::{ArrayD, Axis, Dimension, IxDyn};
use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::mtc::{Label, MtcData};

#[derive(Debug, Clone, PartialEq)]
pub struct Quon {
    category: String,
    rank: usize,
    coeffs: ArrayD<Complex64>,
}

impl Quon {
    pub fn zeros(m: &MtcData, order: usize) -> Self {
        let r = m.rank();
        Self {
            category: m.name().to_string(),
            rank: r,
            coeffs: ArrayD::zeros(IxDyn(&vec![r; order])),
        }
    }

    /// Order-0 quon holding a scalar.
    pub fn scalar(m: &MtcData, value: Complex64) -> Self {
        let mut q = Self::zeros(m, 0);
        q.coeffs[IxDyn(&[])] = value;
        q
    }

    /// The basis vector `|x₁…xₙ⟩`.
    pub fn basis(m: &MtcData, labels: &[Label]) -> Result<Self> {
        let mut q = Self::zeros(m, labels.len());
        let idx: Vec<usize> = labels
            .iter()
            .map(|&x| m.ring().check_label(x).map(Label::index))
            .collect::<Result<_>>()?;
        q.coeffs[IxDyn(&idx)] = Complex64::new(1.0, 0.0);
        Ok(q)
    }

    pub fn from_fn(m: &MtcData, order: usize, mut f: impl FnMut(&[usize]) -> Complex64) -> Self {
        let r = m.rank();
        let coeffs = ArrayD::from_shape_fn(IxDyn(&vec![r; order]), |ix| f(ix.slice()));
        Self {
            category: m.name().to_string(),
            rank: r,
            coeffs,
        }
    }

    /// Builds a quon from a row-major coefficient vector.
    pub fn from_vec(m: &MtcData, order: usize, data: Vec<Complex64>) -> Result<Self> {
        let r = m.rank();
        let expected = r.pow(order as u32);
        if data.len() != expected {
            return Err(Error::ShapeMismatch {
                what: "quon coefficients",
                expected,
                found: data.len(),
            });
        }
        let coeffs = ArrayD::from_shape_vec(IxDyn(&vec![r; order]), data)
            .expect("shape checked above");
        Ok(Self {
            category: m.name().to_string(),
            rank: r,
            coeffs,
        })
    }

    /// Coefficients drawn uniformly from `[-1, 1] + i[-1, 1]`.
    pub fn random(m: &MtcData, order: usize, rng: &mut impl Rng) -> Self {
        Self::from_fn(m, order, |_| {
            Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.ndim()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn category(&self) -> &str {
        &self.category
    }

    pub fn coeffs(&self) -> &ArrayD<Complex64> {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut ArrayD<Complex64> {
        &mut self.coeffs
    }

    pub fn get(&self, idx: &[usize]) -> Complex64 {
        self.coeffs[IxDyn(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Complex64) {
        self.coeffs[IxDyn(idx)] = value;
    }

    /// Coefficients in row-major order.
    pub fn to_vec(&self) -> Vec<Complex64> {
        self.coeffs.iter().copied().collect()
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let mut out = self.clone();
        out.coeffs.mapv_inplace(|c| c * k);
        out
    }

    pub fn add(&self, other: &Quon) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        out.coeffs += &other.coeffs;
        Ok(out)
    }

    /// `Σ conj(self) · other` in the flat coordinate inner product.
    pub fn inner(&self, other: &Quon) -> Result<Complex64> {
        self.same_space(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `max |self − other|` over all coefficients.
    pub fn max_abs_diff(&self, other: &Quon) -> Result<f64> {
        self.same_space(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub(crate) fn check_category(&self, m: &MtcData) -> Result<()> {
        if self.category != m.name() || self.rank != m.rank() {
            return Err(Error::CategoryMismatch {
                left: self.category.clone(),
                right: m.name().to_string(),
            });
        }
        Ok(())
    }

    fn same_space(&self, other: &Quon) -> Result<()> {
        if self.category != other.category || self.rank != other.rank {
            return Err(Error::CategoryMismatch {
                left: self.category.clone(),
                right: other.category.clone(),
            });
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                expected: self.order(),
                found: other.order(),
            });
        }
        Ok(())
    }

    fn require_order(&self, n: usize) -> Result<()> {
        if self.order() != n {
            return Err(Error::OrderMismatch {
                expected: n,
                found: self.order(),
            });
        }
        Ok(())
    }

    /// Applies `new[y] = Σ_x old[x] · mat(x, y)` along every axis.
    fn transform_all_axes(&self, mat: impl Fn(usize, usize) -> Complex64) -> Self {
        let r = self.rank;
        let mut current = self.coeffs.clone();
        for axis in 0..current.ndim() {
            let mut next = ArrayD::zeros(current.raw_dim());
            for (src, mut dst) in current
                .lanes(Axis(axis))
                .into_iter()
                .zip(next.lanes_mut(Axis(axis)))
            {
                for y in 0..r {
                    dst[y] = (0..r).map(|x| src[x] * mat(x, y)).sum();
                }
            }
            current = next;
        }
        Self {
            category: self.category.clone(),
            rank: r,
            coeffs: current,
        }
    }
}

/// `|x⟩·|y⟩ = δ_{x,y} d(x)⁻¹ |x⟩`, extended bilinearly.
pub fn multiply(m: &MtcData, x: &Quon, y: &Quon) -> Result<Quon> {
    x.check_category(m)?;
    y.check_category(m)?;
    x.require_order(1)?;
    y.require_order(1)?;
    Ok(Quon::from_fn(m, 1, |ix| {
        let a = ix[0];
        x.get(&[a]) * y.get(&[a]) / m.dim(a)
    }))
}

/// `|x⟩ * |y⟩ = δ⁻¹ Σ_w N_{x,y}^w |w⟩`, extended bilinearly.
pub fn convolve(m: &MtcData, x: &Quon, y: &Quon) -> Result<Quon> {
    x.check_category(m)?;
    y.check_category(m)?;
    x.require_order(1)?;
    y.require_order(1)?;
    let r = m.rank();
    let mut out = vec![Complex64::new(0.0, 0.0); r];
    for a in 0..r {
        let xa = x.get(&[a]);
        if xa == Complex64::new(0.0, 0.0) {
            continue;
        }
        for b in 0..r {
            let xy = xa * y.get(&[b]);
            for w in m.ring().fuse(a, b) {
                out[w] += xy * m.n(a, b, w) as f64;
            }
        }
    }
    let inv_delta = 1.0 / m.delta();
    Quon::from_vec(m, 1, out.into_iter().map(|c| c * inv_delta).collect())
}

/// String Fourier transform: `|x⟩ ↦ Σ_y S_x^y |y⟩` on every tensor slot.
pub fn sft(m: &MtcData, x: &Quon) -> Result<Quon> {
    x.check_category(m)?;
    let s = m.s();
    Ok(x.transform_all_axes(|a, b| s[[a, b]]))
}

/// Inverse transform, `|y⟩ ↦ Σ_x conj(S_x^y) |x⟩` on every slot.
pub fn sft_inverse(m: &MtcData, x: &Quon) -> Result<Quon> {
    x.check_category(m)?;
    let s = m.s();
    Ok(x.transform_all_axes(|a, b| s[[b, a]].conj()))
}

/// Identity for [`multiply`]: `Σ_x d(x) |x⟩`.
pub fn multiplication_unit(m: &MtcData) -> Quon {
    Quon::from_fn(m, 1, |ix| Complex64::new(m.dim(ix[0]), 0.0))
}

/// Identity for [`convolve`]: `δ |1⟩`.
pub fn convolution_unit(m: &MtcData) -> Quon {
    let mut q = Quon::zeros(m, 1);
    q.set(&[0], Complex64::new(m.delta(), 0.0));
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mtc::{fibonacci, ising, semion, su2_level};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn ket(m: &MtcData, x: usize) -> Quon {
        Quon::basis(m, &[Label(x)]).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let m = fibonacci();
        let one = multiply(&m, &ket(&m, 0), &ket(&m, 0)).unwrap();
        assert!(one.max_abs_diff(&ket(&m, 0)).unwrap() < 1e-15);
        let zero = multiply(&m, &ket(&m, 0), &ket(&m, 1)).unwrap();
        assert_eq!(zero.max_abs(), 0.0);
        let tt = multiply(&m, &ket(&m, 1), &ket(&m, 1)).unwrap();
        assert!((tt.get(&[1]).re - 0.618_033_988_7).abs() < 1e-10);
    }

    #[test]
    fn convolve_examples() {
        let m = fibonacci();
        let d = m.delta();
        let unit = convolve(&m, &ket(&m, 0), &ket(&m, 1)).unwrap();
        assert!(unit.max_abs_diff(&ket(&m, 1).scale(c(1.0 / d))).unwrap() < 1e-15);
        let tt = convolve(&m, &ket(&m, 1), &ket(&m, 1)).unwrap();
        assert!((tt.get(&[0]).re - 1.0 / 1.902_113_032_6).abs() < 1e-10);
        assert!((tt.get(&[1]).re - 1.0 / 1.902_113_032_6).abs() < 1e-10);

        let m = ising();
        let ss = convolve(&m, &ket(&m, 1), &ket(&m, 1)).unwrap();
        let want = Quon::from_vec(&m, 1, vec![c(0.5), c(0.0), c(0.5)]).unwrap();
        assert!(ss.max_abs_diff(&want).unwrap() < 1e-15);
    }

    #[test]
    fn semion_sft_of_unit() {
        let m = semion();
        let h = 1.0 / 2f64.sqrt();
        let out = sft(&m, &ket(&m, 0)).unwrap();
        let want = Quon::from_vec(&m, 1, vec![c(h), c(h)]).unwrap();
        assert!(out.max_abs_diff(&want).unwrap() < 1e-15);
    }

    #[test]
    fn sft_squared_is_charge_conjugation() {
        let m = su2_level(3).unwrap();
        let z4 = crate::mtc::pointed_z(4).unwrap();
        for m in [m, z4] {
            for x in 0..m.rank() {
                let twice = sft(&m, &sft(&m, &ket(&m, x)).unwrap()).unwrap();
                let want = ket(&m, m.dual(x));
                assert!(twice.max_abs_diff(&want).unwrap() < 1e-12);
            }
        }
    }

    #[test]
    fn units() {
        for m in [fibonacci(), ising(), su2_level(4).unwrap()] {
            let um = multiplication_unit(&m);
            let uc = convolution_unit(&m);
            let s1 = sft(&m, &ket(&m, 0)).unwrap().scale(c(m.delta()));
            assert!(um.max_abs_diff(&s1).unwrap() < 1e-12);
            assert!(sft(&m, &um).unwrap().max_abs_diff(&uc).unwrap() < 1e-12);
            for x in 0..m.rank() {
                let k = ket(&m, x);
                assert!(multiply(&m, &um, &k).unwrap().max_abs_diff(&k).unwrap() < 1e-12);
                assert!(convolve(&m, &uc, &k).unwrap().max_abs_diff(&k).unwrap() < 1e-12);
            }
        }
    }

    #[test]
    fn order_and_category_errors() {
        let m = fibonacci();
        let q2 = Quon::zeros(&m, 2);
        assert!(matches!(
            multiply(&m, &q2, &ket(&m, 0)),
            Err(Error::OrderMismatch { expected: 1, found: 2 })
        ));
        let other = ising();
        assert!(matches!(
            convolve(&m, &ket(&other, 0), &ket(&m, 0)),
            Err(Error::CategoryMismatch { .. })
        ));
        assert!(Quon::from_vec(&m, 2, vec![c(0.0); 3]).is_err());
    }

    #[test]
    fn scalar_quon_is_untouched_by_sft() {
        let m = ising();
        let q = Quon::scalar(&m, c(3.5));
        assert_eq!(sft(&m, &q).unwrap(), q);
    }

    proptest! {
        #[test]
        fn sft_is_unitary_and_has_order_four(seed in any::<u64>(), order in 0usize..4) {
            let m = ising();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = Quon::random(&m, order, &mut rng);
            let y = Quon::random(&m, order, &mut rng);
            let fx = sft(&m, &x).unwrap();
            let fy = sft(&m, &y).unwrap();
            let lhs = fx.inner(&fy).unwrap();
            let rhs = x.inner(&y).unwrap();
            prop_assert!((lhs - rhs).norm() < 1e-9);
            let f4 = sft(&m, &sft(&m, &sft(&m, &fx).unwrap()).unwrap()).unwrap();
            prop_assert!(f4.max_abs_diff(&x).unwrap() < 1e-9);
            let back = sft_inverse(&m, &fx).unwrap();
            prop_assert!(back.max_abs_diff(&x).unwrap() < 1e-9);
        }

        #[test]
        fn products_are_commutative_and_associative(seed in any::<u64>()) {
            let m = fibonacci();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = Quon::random(&m, 1, &mut rng);
            let y = Quon::random(&m, 1, &mut rng);
            let z = Quon::random(&m, 1, &mut rng);
            for op in [multiply, convolve] {
                let xy = op(&m, &x, &y).unwrap();
                let yx = op(&m, &y, &x).unwrap();
                prop_assert!(xy.max_abs_diff(&yx).unwrap() < 1e-12);
                let l = op(&m, &xy, &z).unwrap();
                let r = op(&m, &x, &op(&m, &y, &z).unwrap()).unwrap();
                prop_assert!(l.max_abs_diff(&r).unwrap() < 1e-12);
            }
        }
    }
}
