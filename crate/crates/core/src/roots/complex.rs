//! Gaussian rationals: exact complex numbers with rational real and
//! imaginary parts, enough for zero testing of polynomials at chosen points.

use num::{BigRational, One, Signed, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct CRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl CRat {
    pub fn new(re: BigRational, im: BigRational) -> CRat {
        CRat { re, im }
    }

    pub fn from_parts(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> CRat {
        CRat {
            re: BigRational::new(re_n.into(), re_d.into()),
            im: BigRational::new(im_n.into(), im_d.into()),
        }
    }

    pub fn zero() -> CRat {
        CRat {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> CRat {
        CRat {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &CRat) -> CRat {
        CRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn mul(&self, o: &CRat) -> CRat {
        CRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn scale(&self, c: &BigRational) -> CRat {
        CRat {
            re: &self.re * c,
            im: &self.im * c,
        }
    }

    pub fn pow(&self, e: u32) -> CRat {
        let mut acc = CRat::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn in_upper_half_plane(&self) -> bool {
        self.im.is_positive()
    }

    pub fn in_right_half_plane(&self) -> bool {
        self.re.is_positive()
    }
}

impl std::fmt::Display for CRat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, -self.im.clone())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polys::rat;

    #[test]
    fn arithmetic() {
        let i = CRat::new(rat(0), rat(1));
        assert_eq!(i.mul(&i), CRat::new(rat(-1), rat(0)));
        assert_eq!(i.pow(4), CRat::one());
        assert!(i.in_upper_half_plane());
        assert!(!i.in_right_half_plane());
    }
}
