//! Univariate polynomials over the rationals: arithmetic, gcd, squarefree
//! decomposition (Yun), and factorization into irreducibles.
//!
//! The factor search is elementary on purpose: rational roots, then bounded
//! integer-coefficient searches for quadratic and cubic factors (coefficient
//! bounds from the Cauchy root bound). Any surviving residual of degree <= 7
//! is certifiably irreducible because all its potential factors of degree
//! <= 3 have been excluded. Residuals of degree >= 8 are returned unsplit;
//! every consumer in this crate treats factors of degree >= 3 uniformly, so
//! this cannot change a verdict.

use crate::matrix::Matrix;
use crate::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense polynomial, coefficients lowest degree first, trailing zeros
/// trimmed. The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Leading coefficient of the input; the factors are monic.
    pub unit: Rat,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        let mut p = Poly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                p = p.mul(f);
            }
        }
        p
    }
}

impl Poly {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// `t - r`.
    pub fn linear_root(r: &Rat) -> Self {
        Poly::new(vec![-r.clone(), Rat::one()])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let dlead = divisor.leading();
        let ddeg = divisor.degree();
        if rem.is_zero() || rem.degree() < ddeg {
            return (Poly::zero(), rem);
        }
        let mut quot = vec![Rat::zero(); rem.degree() - ddeg + 1];
        while !rem.is_zero() && rem.degree() >= ddeg {
            let k = rem.degree() - ddeg;
            let f = rem.leading() / dlead.clone();
            quot[k] = f.clone();
            let sub = divisor.mul(&Poly::monomial(f, k));
            rem = rem.sub(&sub);
            if rem.coeffs.len() > k + ddeg {
                // Guard against a non-shrinking remainder (cannot happen with
                // exact arithmetic, but make the loop obviously terminating).
                rem.coeffs.truncate(k + ddeg);
                rem.normalize();
            }
        }
        (Poly::new(quot), rem)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`: same irreducible factors, multiplicity one.
    pub fn squarefree_part(&self) -> Poly {
        if self.is_zero() || self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at a square matrix (Horner).
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert!(m.is_square());
        let n = m.rows;
        let mut acc = Matrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        acc
    }

    /// Yun's squarefree decomposition of a monic polynomial:
    /// `self = prod_i out[i].0 ^ out[i].1` with squarefree coprime parts.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let f = self.monic();
        if f.degree() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let mut out = Vec::new();
        let g = f.gcd(&df);
        let mut a = f.div_rem(&g).0;
        let mut b = df.div_rem(&g).0;
        let mut mult = 1usize;
        loop {
            let c = b.sub(&a.derivative());
            if c.is_zero() {
                if a.degree() >= 1 {
                    out.push((a.monic(), mult));
                }
                break;
            }
            let d = a.gcd(&c);
            if d.degree() >= 1 {
                out.push((d.monic(), mult));
            }
            a = a.div_rem(&d).0;
            b = c.div_rem(&d).0;
            mult += 1;
            if a.degree() == 0 {
                break;
            }
        }
        out
    }

    /// Complete factorization into monic irreducibles with multiplicities,
    /// deterministically ordered by degree then coefficient sequence.
    pub fn factor(&self) -> Factorization {
        assert!(!self.is_zero(), "factor of zero polynomial");
        let unit = self.leading();
        let mut factors: Vec<(Poly, usize)> = Vec::new();
        for (part, mult) in self.squarefree_decomposition() {
            for f in factor_squarefree(&part) {
                match factors.iter_mut().find(|(g, _)| *g == f) {
                    Some((_, m)) => *m += mult,
                    None => factors.push((f, mult)),
                }
            }
        }
        factors.sort_by(|(a, _), (b, _)| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.coeffs.cmp(&b.coeffs))
        });
        Factorization { unit, factors }
    }
}

/// Clears denominators and content: primitive integer coefficients with a
/// positive leading entry.
fn primitive_int_coeffs(p: &Poly) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if content.is_zero() {
        content = BigInt::one();
    }
    if ints.last().map(|x| x.is_negative()).unwrap_or(false) {
        content = -content;
    }
    for c in &mut ints {
        *c = &*c / &content;
    }
    ints
}

/// All divisors of `|n|`, positive, ascending. `n` must be nonzero.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Cauchy root bound for an integer polynomial: all complex roots have
/// absolute value below `1 + max |a_i| / |a_n|`.
fn cauchy_bound(ints: &[BigInt]) -> Rat {
    let lead = ints.last().unwrap().abs();
    let mx = ints[..ints.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    Rat::one() + Rat::new(mx, lead)
}

/// Factors a squarefree monic polynomial into monic irreducibles.
fn factor_squarefree(p: &Poly) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut rem = p.monic();
    // Roots at zero first so constant-term divisor enumeration is sound.
    while rem.degree() >= 1 && rem.coeff(0).is_zero() {
        out.push(Poly::new(vec![Rat::zero(), Rat::one()]));
        rem = rem.div_rem(&Poly::monomial(Rat::one(), 1)).0;
    }
    if rem.degree() == 0 {
        return out;
    }
    // Rational roots p/q with p | constant, q | leading of the primitive form.
    'roots: loop {
        if rem.degree() < 1 {
            return out;
        }
        if rem.degree() == 1 {
            out.push(rem.monic());
            return out;
        }
        let ints = primitive_int_coeffs(&rem);
        let a0 = ints[0].clone();
        let an = ints.last().unwrap().clone();
        for q in divisors(&an) {
            for pdiv in divisors(&a0) {
                for sign in [1i32, -1] {
                    let cand = Rat::new(if sign == 1 { pdiv.clone() } else { -pdiv.clone() }, q.clone());
                    if rem.eval(&cand).is_zero() {
                        let lin = Poly::linear_root(&cand);
                        out.push(lin.clone());
                        rem = rem.div_rem(&lin).0;
                        continue 'roots;
                    }
                }
            }
        }
        break;
    }
    // Bounded searches for quadratic then cubic integer factors.
    for deg in [2usize, 3] {
        loop {
            if rem.degree() < 2 * deg {
                break; // a proper factor of this degree would leave degree < deg
            }
            match find_integer_factor(&rem, deg) {
                Some(f) => {
                    out.push(f.monic());
                    rem = rem.div_rem(&f).0;
                }
                None => break,
            }
        }
        if rem.degree() == deg {
            // No smaller factor exists, so a remaining part of this exact
            // degree is irreducible.
            out.push(rem.monic());
            return out;
        }
    }
    if rem.degree() >= 1 {
        // Degree 4..7: irreducible (all factors of degree <= 3 excluded).
        // Degree >= 8: returned unsplit; see module docs.
        out.push(rem.monic());
    }
    out
}

/// Searches for a degree-`deg` factor with integer coefficients of the
/// primitive integer form of `rem` (Gauss: any rational factorization can be
/// rescaled to one). Coefficient bounds come from the Cauchy root bound via
/// elementary symmetric functions.
fn find_integer_factor(rem: &Poly, deg: usize) -> Option<Poly> {
    let ints = primitive_int_coeffs(rem);
    let an = ints.last().unwrap().clone();
    let a0 = ints[0].clone();
    let bound = cauchy_bound(&ints);
    let ceil_bound = |r: &Rat| -> BigInt {
        let q = r.numer() / r.denom();
        q + 2
    };
    match deg {
        2 => {
            // a t^2 + b t + c : a | an, c | a0, |b| <= 2 a B.
            for a in divisors(&an) {
                if !(&an % &a).is_zero() {
                    continue;
                }
                let bmax = ceil_bound(&(Rat::from_integer(a.clone()) * &bound * Rat::from_integer(2.into())));
                for c_abs in divisors(&a0) {
                    for c_sign in [1i32, -1] {
                        let c = if c_sign == 1 { c_abs.clone() } else { -c_abs.clone() };
                        let mut b = -bmax.clone();
                        while b <= bmax {
                            let cand = Poly::new(vec![
                                Rat::from_integer(c.clone()),
                                Rat::from_integer(b.clone()),
                                Rat::from_integer(a.clone()),
                            ]);
                            if cand.divides(rem) {
                                return Some(cand);
                            }
                            b += 1;
                        }
                    }
                }
            }
            None
        }
        3 => {
            // a t^3 + b t^2 + c t + d : a | an, d | a0,
            // |b| <= 3 a B, |c| <= 3 a B^2.
            for a in divisors(&an) {
                let three_ab = Rat::from_integer(a.clone()) * &bound * Rat::from_integer(3.into());
                let bmax = ceil_bound(&three_ab);
                let cmax = ceil_bound(&(three_ab * &bound));
                for d_abs in divisors(&a0) {
                    for d_sign in [1i32, -1] {
                        let d = if d_sign == 1 { d_abs.clone() } else { -d_abs.clone() };
                        let mut b = -bmax.clone();
                        while b <= bmax {
                            let mut c = -cmax.clone();
                            while c <= cmax {
                                let cand = Poly::new(vec![
                                    Rat::from_integer(d.clone()),
                                    Rat::from_integer(c.clone()),
                                    Rat::from_integer(b.clone()),
                                    Rat::from_integer(a.clone()),
                                ]);
                                if cand.divides(rem) {
                                    return Some(cand);
                                }
                                c += 1;
                            }
                            b += 1;
                        }
                    }
                }
            }
            None
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn p(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| rint(c)).collect())
    }

    #[test]
    fn factor_difference_of_squares() {
        let f = p(&[-1, 0, 1]).factor(); // t^2 - 1
        assert_eq!(f.unit, rint(1));
        assert_eq!(
            f.factors,
            vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]
        );
    }

    #[test]
    fn factor_irreducible_quadratic() {
        let f = p(&[1, 0, 1]).factor(); // t^2 + 1
        assert_eq!(f.factors, vec![(p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn factor_with_multiplicity_expands_back() {
        // (t-1)^2 (t^2+t+1): oracle is re-expansion.
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 1, 1]));
        let fac = f.factor();
        assert_eq!(fac.expand(), f);
        assert_eq!(
            fac.factors,
            vec![(p(&[-1, 1]), 2), (p(&[1, 1, 1]), 1)]
        );
    }

    #[test]
    fn factor_rational_roots() {
        // (2t-1)(3t+2) = 6t^2 + t - 2, unit 6, monic roots 1/2 and -2/3.
        let f = p(&[-2, 1, 6]);
        let fac = f.factor();
        assert_eq!(fac.unit, rint(6));
        assert_eq!(
            fac.factors,
            vec![
                (Poly::linear_root(&rat(1, 2)).monic(), 1),
                (Poly::linear_root(&rat(-2, 3)).monic(), 1)
            ]
        );
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn factor_product_of_cubics() {
        // (t^3-2)(t^3-3): both irreducible, caught by the cubic search.
        let f = p(&[-2, 0, 0, 1]).mul(&p(&[-3, 0, 0, 1]));
        let fac = f.factor();
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().all(|(g, m)| g.degree() == 3 && *m == 1));
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn squarefree_decomposition_yun() {
        // t (t+1)^2 (t^2+1)^3
        let f = p(&[0, 1])
            .mul(&p(&[1, 1]))
            .mul(&p(&[1, 1]))
            .mul(&p(&[1, 0, 1]).mul(&p(&[1, 0, 1])).mul(&p(&[1, 0, 1])));
        let dec = f.squarefree_decomposition();
        assert_eq!(
            dec,
            vec![(p(&[0, 1]), 1), (p(&[1, 1]), 2), (p(&[1, 0, 1]), 3)]
        );
    }

    #[test]
    fn div_rem_exact() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }
}
