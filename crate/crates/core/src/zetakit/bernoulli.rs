use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use spin::Once;

use crate::numkernel::CValue;
use crate::{Error, Result};

pub const MAX_BERNOULLI: usize = 64;
pub const MAX_EULER: usize = 32;

static BERNOULLI: Once<Vec<BigRational>> = Once::new();
static EULER: Once<Vec<BigInt>> = Once::new();

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(c.clone());
    }
    row
}

fn bernoulli_table() -> &'static [BigRational] {
    BERNOULLI.call_once(|| {
        let mut b: Vec<BigRational> = Vec::with_capacity(MAX_BERNOULLI + 1);
        b.push(BigRational::one());
        for n in 1..=MAX_BERNOULLI {
            // Σ_{k=0}^{n} C(n+1, k) B_k = 0
            let row = binomial_row(n + 1);
            let mut s = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                s += BigRational::from_integer(row[k].clone()) * bk;
            }
            b.push(-s / BigRational::from_integer(BigInt::from(n + 1)));
        }
        b
    })
}

fn euler_table() -> &'static [BigInt] {
    EULER.call_once(|| {
        let mut e: Vec<BigInt> = alloc::vec![BigInt::zero(); MAX_EULER + 1];
        e[0] = BigInt::one();
        for n in (2..=MAX_EULER).step_by(2) {
            // Σ_{k even} C(n, k) E_k = 0, from sech·cosh = 1
            let row = binomial_row(n);
            let mut s = BigInt::zero();
            for k in (0..n).step_by(2) {
                s += &row[k] * &e[k];
            }
            e[n] = -s;
        }
        e
    })
}

/// Exact Bernoulli number B_n (B_1 = −½), n ≤ 64.
pub fn bernoulli_number(n: usize) -> Result<BigRational> {
    if n > MAX_BERNOULLI {
        return Err(Error::Unsupported { func: "bernoulli_number", n: n as u64, max: MAX_BERNOULLI as u64 });
    }
    Ok(bernoulli_table()[n].clone())
}

/// Exact Euler number E_n (E_2 = −1), n ≤ 32.
pub fn euler_number(n: usize) -> Result<BigInt> {
    if n > MAX_EULER {
        return Err(Error::Unsupported { func: "euler_number", n: n as u64, max: MAX_EULER as u64 });
    }
    Ok(euler_table()[n].clone())
}

/// B_n(x) = Σ C(n,k) B_k x^{n−k}, by Horner in x.
pub fn bernoulli_poly(n: usize, x: CValue) -> Result<CValue> {
    if n > MAX_BERNOULLI {
        return Err(Error::Unsupported { func: "bernoulli_poly", n: n as u64, max: MAX_BERNOULLI as u64 });
    }
    let b = bernoulli_table();
    let row = binomial_row(n);
    let mut acc = CValue::new(0.0, 0.0);
    for k in 0..=n {
        let coef = BigRational::from_integer(row[k].clone()) * &b[k];
        acc = acc * x + coef.to_f64().unwrap_or(f64::NAN);
    }
    Ok(acc)
}

/// B_n(x) in exact rational arithmetic.
pub fn bernoulli_poly_exact(n: usize, x: &BigRational) -> Result<BigRational> {
    if n > MAX_BERNOULLI {
        return Err(Error::Unsupported { func: "bernoulli_poly_exact", n: n as u64, max: MAX_BERNOULLI as u64 });
    }
    let b = bernoulli_table();
    let row = binomial_row(n);
    let mut acc = BigRational::zero();
    for k in 0..=n {
        acc = acc * x + BigRational::from_integer(row[k].clone()) * &b[k];
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::BERNOULLI_EVEN;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli_number(0).unwrap(), q(1, 1));
        assert_eq!(bernoulli_number(1).unwrap(), q(-1, 2));
        assert_eq!(bernoulli_number(2).unwrap(), q(1, 6));
        assert_eq!(bernoulli_number(12).unwrap(), q(-691, 2730));
        assert_eq!(bernoulli_number(13).unwrap(), q(0, 1));
        assert!(bernoulli_number(65).is_err());
        // B_64 = −106783830147866529886385444979142647942017 / 510
        let b64 = bernoulli_number(64).unwrap();
        assert_eq!(b64.denom(), &BigInt::from(510));
        assert_eq!(b64.numer().to_str_radix(10), "-106783830147866529886385444979142647942017");
    }

    #[test]
    fn float_table_matches_exact() {
        for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
            let e = bernoulli_number(2 * j + 2).unwrap().to_f64().unwrap();
            assert_eq!(*b, e, "B_{}", 2 * j + 2);
        }
    }

    #[test]
    fn euler_examples() {
        let e: Vec<i64> = (0..=6).map(|n| euler_number(n).unwrap().to_i64().unwrap()).collect();
        assert_eq!(e, [1, 0, -1, 0, 5, 0, -61]);
        // E_32 = 177519391579539289436664789665
        assert_eq!(euler_number(32).unwrap().to_str_radix(10), "177519391579539289436664789665");
        assert!(euler_number(33).is_err());
    }

    #[test]
    fn polynomial_examples() {
        let x = q(3, 4);
        assert_eq!(bernoulli_poly_exact(1, &x).unwrap(), q(1, 4));
        assert_eq!(bernoulli_poly_exact(2, &x).unwrap(), q(-1, 48));
        assert_eq!(bernoulli_poly_exact(3, &x).unwrap(), q(-3, 64));
        let v = bernoulli_poly(3, CValue::new(0.75, 0.0)).unwrap();
        assert!((v.re + 3.0 / 64.0).abs() < 1e-16);
    }

    #[test]
    fn concurrent_first_use_builds_one_table() {
        extern crate std;
        let handles: Vec<_> = (0..8).map(|_| std::thread::spawn(|| bernoulli_table().as_ptr() as usize)).collect();
        let ptrs: Vec<usize> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(ptrs.windows(2).all(|w| w[0] == w[1]));
    }
}
