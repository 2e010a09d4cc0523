use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;
use crate::error::{Error, Result};

/// `w + x·i + y·j + z·k` with rational coefficients.
///
/// `i² = j² = k² = ijk = −1`. Multiplication is associative but not
/// commutative.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Integer coefficients, handy for literals.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(w.into(), x.into(), y.into(), z.into())
    }

    pub fn from_rational(r: Rational) -> Self {
        Quaternion::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Quaternion::default()
    }

    pub fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    /// The canonical basis `(1, i, j, k)` of the quaternions over the rationals.
    pub fn d_basis() -> [Quaternion; 4] {
        [
            Quaternion::one(),
            Quaternion::i(),
            Quaternion::j(),
            Quaternion::k(),
        ]
    }

    pub fn coefficients(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// True iff the quaternion lies in the rational center.
    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm2(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Quaternion::new(&self.w * c, &self.x * c, &self.y * c, &self.z * c)
    }

    /// `conj(q) / norm2(q)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let n = self.norm2().recip()?;
        Ok(self.conj().scale(&n))
    }
}

impl Add<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &rhs.w,
            &self.x + &rhs.x,
            &self.y + &rhs.y,
            &self.z + &rhs.z,
        )
    }
}

impl Sub<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &rhs.w,
            &self.x - &rhs.x,
            &self.y - &rhs.y,
            &self.z - &rhs.z,
        )
    }
}

/// Hamilton product.
impl Mul<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Quaternion> for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Quaternion> for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: &Quaternion) -> Quaternion {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl From<Rational> for Quaternion {
    fn from(r: Rational) -> Self {
        Quaternion::from_rational(r)
    }
}

impl From<i64> for Quaternion {
    fn from(n: i64) -> Self {
        Quaternion::from_rational(n.into())
    }
}

/// Prints the `w+xi+yj+zk` text form, e.g. `1/2+i-3k`; zero terms are
/// omitted and unit coefficients are elided.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (coef, unit) in self.coefficients().into_iter().zip(["", "i", "j", "k"]) {
            if coef.is_zero() {
                continue;
            }
            let mag = if coef.is_negative() {
                f.write_str("-")?;
                coef.abs()
            } else {
                if !first {
                    f.write_str("+")?;
                }
                coef.clone()
            };
            if unit.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(unit)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    /// Bilinear expansion over the multiplication table of the units,
    /// independent of the closed-form Hamilton product above.
    fn table_product(p: &Quaternion, r: &Quaternion) -> Quaternion {
        // unit[a] * unit[b] = sign * unit[idx]
        const TABLE: [[(i64, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let mut acc = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        for (a, ca) in p.coefficients().into_iter().enumerate() {
            for (b, cb) in r.coefficients().into_iter().enumerate() {
                let (sign, idx) = TABLE[a][b];
                acc[idx] = &acc[idx] + &(ca * cb * Rational::integer(sign));
            }
        }
        let [w, x, y, z] = acc;
        Quaternion::new(w, x, y, z)
    }

    #[test]
    fn add_examples() {
        assert_eq!(q(1, 1, 0, 0) + q(0, 0, 1, 0), q(1, 1, 1, 0));
        let a = q(0, 3, -2, 1);
        assert_eq!(&a + &Quaternion::zero(), a);
        let half = Quaternion::new(Rational::new(1, 2), 1.into(), 0.into(), 0.into());
        let other = Quaternion::new(Rational::new(1, 2), (-1).into(), 0.into(), 0.into());
        assert_eq!(half + other, Quaternion::one());
    }

    #[test]
    fn unit_products() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, q(-1, 0, 0, 0));
        assert_ne!(&i * &j, &j * &i);
    }

    #[test]
    fn product_matches_table_expansion() {
        let a = q(1, 1, 0, 0);
        let b = q(1, 0, 1, 0);
        assert_eq!(table_product(&a, &b), q(1, 1, 1, 1));
        assert_eq!(&a * &b, q(1, 1, 1, 1));
        let c = q(2, -3, 5, 7);
        let d = q(-1, 4, 0, 2);
        assert_eq!(&c * &d, table_product(&c, &d));
        assert_eq!(&d * &c, table_product(&d, &c));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Quaternion::one().inv().unwrap(), Quaternion::one());
        assert_eq!(Quaternion::i().inv().unwrap(), -Quaternion::i());
        let r = q(1, 1, 0, 0).inv().unwrap();
        assert_eq!(
            r,
            Quaternion::new(
                Rational::new(1, 2),
                Rational::new(-1, 2),
                0.into(),
                0.into()
            )
        );
        assert_eq!(table_product(&q(1, 1, 0, 0), &r), Quaternion::one());
        assert_eq!(table_product(&r, &q(1, 1, 0, 0)), Quaternion::one());
        assert_eq!(Quaternion::zero().inv(), Err(Error::ZeroDivision));
    }

    #[test]
    fn conj_norm_basis() {
        assert_eq!(Quaternion::i().conj(), -Quaternion::i());
        assert_eq!(q(1, 1, 1, 1).norm2(), Rational::integer(4));
        assert_eq!(
            Quaternion::d_basis(),
            [
                Quaternion::one(),
                Quaternion::i(),
                Quaternion::j(),
                Quaternion::k()
            ]
        );
    }

    #[test]
    fn display() {
        let a = Quaternion::new(Rational::new(1, 2), 1.into(), 0.into(), (-3).into());
        assert_eq!(a.to_string(), "1/2+i-3k");
        assert_eq!(Quaternion::zero().to_string(), "0");
        assert_eq!((-Quaternion::j()).to_string(), "-j");
        assert_eq!(
            Quaternion::new(0.into(), Rational::new(-1, 2), 0.into(), 1.into()).to_string(),
            "-1/2i+k"
        );
    }
}
