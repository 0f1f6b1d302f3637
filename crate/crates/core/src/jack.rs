//! Jack polynomials P_λ^k: the triangular eigen-solve in any number of
//! variables, the exact two-variable closed form, the C-normalization, and the
//! interlacing-integral lift from n−1 to n variables.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::{dominated_partitions, eigenvalue_e, hook_product_h, JackParameter, Partition};
use crate::quadrature::{gauss_jacobi_rule, QuadratureRule};
use crate::scalar::{binomial, factorial, rising, Scalar};
use crate::sympoly::{lb_monomial_image, MonomialExpansion};

/// Default Gauss–Jacobi node count per axis for [`jack_recursion_lift`].
pub const DEFAULT_LIFT_NODES: usize = 48;

/// P_λ^k in `nvars` variables, monic in m_λ.
#[derive(Clone, Debug, PartialEq)]
pub struct JackPolynomial<T> {
    lambda: Partition,
    k: JackParameter<T>,
    expansion: MonomialExpansion<T>,
}

impl<T: Scalar> JackPolynomial<T> {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn k(&self) -> &JackParameter<T> {
        &self.k
    }

    pub fn nvars(&self) -> usize {
        self.expansion.nvars()
    }

    pub fn expansion(&self) -> &MonomialExpansion<T> {
        &self.expansion
    }

    pub fn eval(&self, x: &[T]) -> Result<T> {
        self.expansion.eval(x)
    }

    /// Evaluates with coefficients rounded to `f64`.
    pub fn eval_f64(&self, x: &[f64]) -> Result<f64> {
        self.expansion.map_coeffs(Scalar::to_f64).eval(x)
    }
}

/// Solves for P_λ^k in `n` variables.
///
/// With a_λλ = 1 and partitions μ < λ visited in decreasing lexicographic
/// order (a linear extension of dominance),
/// a_μλ = Σ_{μ<ν≤λ} c_{ν→μ} a_νλ / (e_λ − e_μ), where c_{ν→μ} is the
/// coefficient of m_μ in D_k m_ν.
pub fn jack_p<T: Scalar>(lambda: &Partition, k: &JackParameter<T>, n: usize) -> Result<JackPolynomial<T>> {
    lambda.check_fits(n)?;
    let basis = dominated_partitions(lambda, n);
    let images = basis.iter().map(|nu| lb_monomial_image(nu, k, n)).collect::<Result<Vec<_>>>()?;
    let e_lambda = eigenvalue_e(lambda, k, n)?;

    let mut coeffs: Vec<T> = Vec::with_capacity(basis.len());
    coeffs.push(T::one());
    for (idx, mu) in basis.iter().enumerate().skip(1) {
        let gap = e_lambda.clone() - eigenvalue_e(mu, k, n)?;
        if gap.is_zero() {
            return Err(Error::DegenerateEigenvalue);
        }
        let mut rhs = T::zero();
        for (nu_idx, a_nu) in coeffs.iter().enumerate().take(idx) {
            rhs = rhs + images[nu_idx].coeff(mu) * a_nu.clone();
        }
        coeffs.push(rhs / gap);
    }

    let mut expansion = MonomialExpansion::new(n);
    for (mu, c) in basis.into_iter().zip(coeffs) {
        expansion.add_term(mu, c)?;
    }
    Ok(JackPolynomial { lambda: lambda.clone(), k: k.clone(), expansion })
}

/// (2k)_m / (k)_m, the value P_(m)^k(1, 1) = Γ(m+2k)Γ(k)/(Γ(m+k)Γ(2k)).
pub fn two_var_row_at_ones<T: Scalar>(m: u32, k: &JackParameter<T>) -> T {
    let kv = k.value();
    rising(&(T::from_int(2) * kv.clone()), m) / rising(kv, m)
}

fn split_two(lambda: &Partition) -> Result<(u32, u32)> {
    lambda.check_fits(2)?;
    let ell = lambda.part(1);
    Ok((lambda.part(0) - ell, ell))
}

/// P_λ^k(x₁, x₂) from the closed form
/// Γ(m+2k)/(2^{2k−1}Γ(k)Γ(m+k)) (x₁x₂)^ℓ ∫₋₁¹ (s + u·d)^m (1−u²)^{k−1} du
/// with s = (x₁+x₂)/2, d = (x₁−x₂)/2, ℓ = λ₂ and m = λ₁ − λ₂.
///
/// The integral is expanded binomially; odd moments vanish and each even
/// moment B(j+½, k) combines with the prefactor into the rational
/// (2k)_m/(k)_m · (½)_j/(k+½)_j, so no quadrature is involved.
pub fn jack_p_two_var<T: Scalar>(lambda: &Partition, k: &JackParameter<T>, x1: &T, x2: &T) -> Result<T> {
    let (m, ell) = split_two(lambda)?;
    let half = T::ratio(1, 2);
    let s = (x1.clone() + x2.clone()) * half.clone();
    let d = (x1.clone() - x2.clone()) * half.clone();
    let d2 = d.clone() * d;
    let k_half = k.value().clone() + half.clone();

    let mut sum = T::zero();
    let mut moment_ratio = T::one();
    for j in 0..=(m / 2) {
        if j > 0 {
            let jm1 = T::from_int(i64::from(j - 1));
            moment_ratio = moment_ratio * (half.clone() + jm1.clone()) / (k_half.clone() + jm1);
        }
        let term = binomial::<T>(m, 2 * j) * s.powu(m - 2 * j) * d2.powu(j);
        sum = sum + term * moment_ratio.clone();
    }
    let rect = (x1.clone() * x2.clone()).powu(ell);
    Ok(two_var_row_at_ones(m, k) * rect * sum)
}

/// P_λ^k(1, …, 1) from the expansion.
pub fn jack_p_at_ones<T: Scalar>(lambda: &Partition, k: &JackParameter<T>, n: usize) -> Result<T> {
    let p = jack_p(lambda, k, n)?;
    let ones: Vec<T> = (0..n).map(|_| T::one()).collect();
    p.eval(&ones)
}

/// |λ|!/h_k(λ), the factor taking P_λ^k to C_λ^k.
pub fn c_normalization<T: Scalar>(lambda: &Partition, k: &JackParameter<T>) -> T {
    factorial::<T>(lambda.weight()) / hook_product_h(lambda, k)
}

/// C_λ^k(x) = (|λ|!/h_k(λ)) P_λ^k(x).
pub fn jack_c<T: Scalar>(lambda: &Partition, k: &JackParameter<T>, n: usize, x: &[T]) -> Result<T> {
    let p = jack_p(lambda, k, n)?;
    Ok(c_normalization(lambda, k) * p.eval(x)?)
}

fn ln_gamma_ratio(a: f64, b: f64) -> f64 {
    libm::lgamma(a) - libm::lgamma(b)
}

/// Constant of the interlacing integral:
/// ∏_{i=1}^{n−1} Γ(λ_i + (n−i+1)k) / (Γ(λ_i + (n−i)k) Γ(k)).
fn lift_prefactor(lambda: &Partition, k: f64, n: usize) -> f64 {
    let mut log = 0.0;
    for i in 1..n {
        let li = f64::from(lambda.part(i - 1));
        let shift = (n - i) as f64;
        log += ln_gamma_ratio(li + (shift + 1.0) * k, li + shift * k) - libm::lgamma(k);
    }
    libm::exp(log)
}

/// Evaluates P_λ^k(x) for n ∈ {2, 3} by integrating P_λ^k in n−1 variables
/// over the interlacing set x₁ ≤ ν₁ ≤ x₂ ≤ … ≤ ν_{n−1} ≤ x_n against
/// ∏_{i<j}(ν_j − ν_i) ∏_{i,j}|x_j − ν_i|^{k−1}.
///
/// Each ν_i ranges over [x_i, x_{i+1}] independently. The endpoint factors
/// |x_i − ν_i|^{k−1}|x_{i+1} − ν_i|^{k−1} are absorbed by a Gauss–Jacobi rule
/// mapped to that interval; the remaining factors are integrated as smooth.
pub fn jack_recursion_lift(lambda: &Partition, k: &JackParameter<f64>, x: &[f64], npoints: usize) -> Result<f64> {
    let n = x.len();
    if !(2..=3).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    lambda.check_fits(n - 1)?;
    if x[0] < 0.0 || x.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("coordinates must be nonnegative and strictly increasing"));
    }
    let kv = *k.value();
    let rule = gauss_jacobi_rule(npoints, kv)?;

    let mut vandermonde = 1.0;
    for i in 0..n {
        for j in (i + 1)..n {
            vandermonde *= libm::pow(x[j] - x[i], 1.0 - 2.0 * kv);
        }
    }

    let integral = if n == 2 {
        let (nodes, weights) = rule.mapped(x[0], x[1]);
        let l1 = lambda.part(0);
        compensated_dot(&weights, nodes.iter().map(|nu| nu.powu(l1)))
    } else {
        lift_three(lambda, k, x, &rule)?
    };
    Ok(lift_prefactor(lambda, kv, n) * vandermonde * integral)
}

fn lift_three(lambda: &Partition, k: &JackParameter<f64>, x: &[f64], rule: &QuadratureRule) -> Result<f64> {
    let kv = *k.value();
    let (n1, w1) = rule.mapped(x[0], x[1]);
    let (n2, w2) = rule.mapped(x[1], x[2]);
    let mut acc = crate::special::Neumaier::default();
    for (a, &nu1) in n1.iter().enumerate() {
        let outer = w1[a] * libm::pow(x[2] - nu1, kv - 1.0);
        for (b, &nu2) in n2.iter().enumerate() {
            let inner = w2[b] * libm::pow(nu2 - x[0], kv - 1.0);
            let p = jack_p_two_var(lambda, k, &nu2, &nu1)?;
            acc.add(outer * inner * p * (nu2 - nu1));
        }
    }
    Ok(acc.sum())
}

fn compensated_dot(weights: &[f64], values: impl Iterator<Item = f64>) -> f64 {
    let mut acc = crate::special::Neumaier::default();
    for (w, v) in weights.iter().zip(values) {
        acc.add(w * v);
    }
    acc.sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of_weight;
    use crate::scalar::{rational, Rational};
    use crate::sympoly::apply_lb_operator;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn kq(n: i64, d: i64) -> JackParameter<Rational> {
        JackParameter::new(rational(n, d)).unwrap()
    }

    #[test]
    fn small_jack_expansions() {
        let k = kq(3, 4);
        let j1 = jack_p(&p(&[1]), &k, 2).unwrap();
        assert_eq!(j1.expansion(), &MonomialExpansion::monomial(p(&[1]), 2).unwrap());
        let j11 = jack_p(&p(&[1, 1]), &k, 2).unwrap();
        assert_eq!(j11.expansion(), &MonomialExpansion::monomial(p(&[1, 1]), 2).unwrap());
        let j2 = jack_p(&p(&[2]), &k, 2).unwrap();
        let kv = k.value().clone();
        let expect = rational(2, 1) * kv.clone() / (kv + rational(1, 1));
        assert_eq!(j2.expansion().coeff(&p(&[2])), rational(1, 1));
        assert_eq!(j2.expansion().coeff(&p(&[1, 1])), expect);
    }

    #[test]
    fn jack_at_k_one_is_schur() {
        // k = 1 gives Schur functions: s_(2,1) in three variables = m_(2,1) + 2 m_(1,1,1)
        let j = jack_p(&p(&[2, 1]), &kq(1, 1), 3).unwrap();
        assert_eq!(j.expansion().coeff(&p(&[1, 1, 1])), rational(2, 1));
        assert_eq!(j.expansion().len(), 2);
    }

    #[test]
    fn jack_is_eigenfunction() {
        let k = kq(3, 2);
        for n in 2..=3 {
            for lambda in partitions_of_weight(5, n) {
                let j = jack_p(&lambda, &k, n).unwrap();
                let image = apply_lb_operator(j.expansion(), &k).unwrap();
                let e = eigenvalue_e(&lambda, &k, n).unwrap();
                assert_eq!(image, j.expansion().scale(&e));
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let x1 = rational(5, 3);
        let x2 = rational(-2, 7);
        for k in [kq(1, 2), kq(1, 1), kq(2, 1)] {
            assert_eq!(jack_p_two_var(&p(&[1]), &k, &x1, &x2).unwrap(), x1.clone() + x2.clone());
            assert_eq!(jack_p_two_var(&p(&[1, 1]), &k, &x1, &x2).unwrap(), x1.clone() * x2.clone());
        }
        let expect = x1.clone() * x1.clone() + x2.clone() * x2.clone() + x1.clone() * x2.clone();
        assert_eq!(jack_p_two_var(&p(&[2]), &kq(1, 1), &x1, &x2).unwrap(), expect);
        assert!(jack_p_two_var(&p(&[1, 1, 1]), &kq(1, 1), &x1, &x2).is_err());
    }

    #[test]
    fn values_at_ones() {
        let k = kq(1, 2);
        assert_eq!(jack_p_at_ones(&p(&[1, 1]), &k, 2).unwrap(), rational(1, 1));
        assert_eq!(jack_p_at_ones(&p(&[1]), &k, 2).unwrap(), rational(2, 1));
        // Γ(3)Γ(1/2)/(Γ(5/2)Γ(1)) = 2/(3/4) = 8/3
        assert_eq!(jack_p_at_ones(&p(&[2]), &k, 2).unwrap(), rational(8, 3));
        assert_eq!(two_var_row_at_ones(2, &k), rational(8, 3));
    }

    #[test]
    fn c_normalization_examples() {
        let k = kq(2, 3);
        let x = [rational(1, 1), rational(0, 1)];
        assert_eq!(jack_c(&p(&[1]), &k, 2, &x).unwrap(), rational(1, 1));
        assert_eq!(jack_c(&Partition::empty(), &k, 2, &x).unwrap(), rational(1, 1));
        let y = [rational(3, 2), rational(-1, 5)];
        let mut total = rational(0, 1);
        for lambda in partitions_of_weight(2, 2) {
            total += jack_c(&lambda, &k, 2, &y).unwrap();
        }
        let s = y[0].clone() + y[1].clone();
        assert_eq!(total, s.clone() * s);
    }

    #[test]
    fn lift_reproduces_two_variable_polynomials() {
        for kv in [0.5, 1.0, 2.3] {
            let k = JackParameter::new(kv).unwrap();
            let got = jack_recursion_lift(&p(&[1]), &k, &[0.4, 2.1], 32).unwrap();
            assert!((got - 2.5).abs() < 1e-12, "k={kv}: {got}");
            let got = jack_recursion_lift(&p(&[4]), &k, &[0.4, 2.1], 32).unwrap();
            let want = jack_p_two_var(&p(&[4]), &k, &0.4, &2.1).unwrap();
            assert!((got - want).abs() < 1e-11 * want, "k={kv}: {got} vs {want}");
        }
    }

    #[test]
    fn lift_to_three_variables() {
        let x = [0.3, 1.1, 2.2];
        let k = JackParameter::new(1.0).unwrap();
        let got = jack_recursion_lift(&p(&[1]), &k, &x, DEFAULT_LIFT_NODES).unwrap();
        assert!((got - 3.6).abs() < 1e-10, "{got}");
        let exact = jack_p(&p(&[2]), &kq(1, 1), 3).unwrap().eval_f64(&x).unwrap();
        let got = jack_recursion_lift(&p(&[2]), &k, &x, DEFAULT_LIFT_NODES).unwrap();
        assert!((got - exact).abs() < 1e-8 * exact, "{got} vs {exact}");
    }

    #[test]
    fn lift_rejects_bad_input() {
        let k = JackParameter::new(1.0).unwrap();
        assert!(jack_recursion_lift(&p(&[1]), &k, &[1.0, 1.0], 8).is_err());
        assert!(jack_recursion_lift(&p(&[1]), &k, &[2.0, 1.0], 8).is_err());
        assert_eq!(jack_recursion_lift(&p(&[1]), &k, &[0.0, 1.0, 2.0, 3.0], 8), Err(Error::UnsupportedDimension(4)));
        assert!(jack_recursion_lift(&p(&[1, 1]), &k, &[0.5, 1.0], 8).is_err());
    }
}
