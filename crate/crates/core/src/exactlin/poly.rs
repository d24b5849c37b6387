//! Univariate polynomials, coefficients stored lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::matrix::Matrix;
use super::rational::Rational;

pub fn trim<F: Field>(p: &mut Vec<F>) {
    while p.last().is_some_and(F::is_zero) {
        p.pop();
    }
}

pub fn eval<F: Field>(p: &[F], x: &F) -> F {
    let mut acc = F::zero();
    for c in p.iter().rev() {
        acc = acc.times(x).plus(c);
    }
    acc
}

pub fn mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_mul_assign(x, y);
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a nonzero `m`.
pub fn rem<F: Field>(a: &[F], m: &[F]) -> Vec<F> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let inv = m[dm].inverse().expect("nonzero leading coefficient");
    while r.len() > dm {
        let k = r.len() - 1;
        let c = r[k].times(&inv);
        for (i, x) in m.iter().enumerate() {
            r[k - dm + i].sub_mul_assign(&c, x);
        }
        trim(&mut r);
    }
    r
}

pub fn monic<F: Field>(p: &[F]) -> Vec<F> {
    let mut p = p.to_vec();
    trim(&mut p);
    if let Some(l) = p.last().cloned() {
        let inv = l.inverse().expect("nonzero");
        for c in &mut p {
            *c = c.times(&inv);
        }
    }
    p
}

pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let (mut a, mut b) = (monic(a), monic(b));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = monic(&r);
    }
    a
}

fn powmod<F: Field>(base: &[F], mut e: u64, m: &[F]) -> Vec<F> {
    let mut acc = vec![F::one()];
    let mut b = rem(base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b), m);
        }
        e >>= 1;
        if e > 0 {
            b = rem(&mul(&b, &b), m);
        }
    }
    acc
}

/// Characteristic polynomial `det(x I - A)`, via reduction to Hessenberg form.
pub fn char_poly<F: Field>(a: &Matrix<F>) -> Vec<F> {
    assert!(a.is_square());
    let n = a.rows();
    let mut h: Vec<Vec<F>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else { continue };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = h[m][m - 1].inverse().unwrap();
        for j in m + 1..n {
            let u = h[j][m - 1].times(&inv);
            if u.is_zero() {
                continue;
            }
            let row_m = h[m].clone();
            for (x, y) in h[j].iter_mut().zip(&row_m) {
                x.sub_mul_assign(&u, y);
            }
            for row in h.iter_mut() {
                let y = row[j].clone();
                row[m].add_mul_assign(&u, &y);
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    let mut ps: Vec<Vec<F>> = vec![vec![F::one()]];
    for m in 0..n {
        let mut next = mul(&ps[m], &[h[m][m].negated(), F::one()]);
        let mut prod = F::one();
        for i in (0..m).rev() {
            prod = prod.times(&h[i + 1][i]);
            if prod.is_zero() {
                break;
            }
            let c = h[i][m].times(&prod);
            for (k, x) in ps[i].iter().enumerate() {
                if next.len() <= k {
                    next.push(F::zero());
                }
                next[k].sub_mul_assign(&c, x);
            }
        }
        ps.push(next);
    }
    let mut p = ps.pop().unwrap();
    trim(&mut p);
    p
}

/// Distinct roots of a nonzero polynomial over F_p.
pub fn roots_mod_p<F: Field>(p: &[F]) -> Vec<F> {
    let f = monic(p);
    if f.len() <= 1 {
        return Vec::new();
    }
    let q = F::characteristic();
    if q <= 1024 {
        return (0..q as i64).map(F::from_i64).filter(|x| eval(&f, x).is_zero()).collect();
    }
    // product of the distinct linear factors: gcd(x^q - x, f)
    let x = vec![F::zero(), F::one()];
    let mut xq = powmod(&x, q, &f);
    while xq.len() < 2 {
        xq.push(F::zero());
    }
    xq[1] = xq[1].minus(&F::one());
    trim(&mut xq);
    let g = gcd(&f, &xq);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    split_linear(&g, q, &mut rng, &mut out);
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct linear factors.
fn split_linear<F: Field>(g: &[F], q: u64, rng: &mut ChaCha8Rng, out: &mut Vec<F>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push(g[0].negated().times(&g[1].inverse().unwrap())),
        _ => loop {
            let d = F::from_i64(rng.gen_range(0..i64::MAX));
            let mut h = powmod(&[d, F::one()], (q - 1) / 2, g);
            if h.is_empty() {
                h.push(F::zero());
            }
            h[0] = h[0].minus(&F::one());
            trim(&mut h);
            let c = gcd(g, &h);
            if c.len() > 1 && c.len() < g.len() {
                let other = quotient(g, &c);
                split_linear(&c, q, rng, out);
                split_linear(&other, q, rng, out);
                return;
            }
        },
    }
}

/// Exact quotient `a / b`.
fn quotient<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv = b[db].inverse().unwrap();
    let mut q = vec![F::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k].times(&inv);
        for (i, x) in b.iter().enumerate() {
            r[k - db + i].sub_mul_assign(&c, x);
        }
        q[k - db] = c;
        trim(&mut r);
    }
    q
}

/// Bound on the constant and leading coefficients for rational root search.
const DIVISOR_LIMIT: u64 = 1 << 32;

/// Distinct rational roots, by the rational root theorem. Polynomials whose
/// extreme coefficients are too large to factor are searched only for 0.
pub fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    let mut p = p.to_vec();
    trim(&mut p);
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut low = 0;
    while p[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Rational::zero());
    }
    let p = &p[low..];
    if p.len() <= 1 {
        return roots;
    }
    let l = Rational::lcm_denoms(p.iter());
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let (a0, an) = (ints[0].abs(), ints[ints.len() - 1].abs());
    let (Some(a0), Some(an)) = (a0.to_u64(), an.to_u64()) else { return roots };
    if a0 > DIVISOR_LIMIT || an > DIVISOR_LIMIT {
        return roots;
    }
    for num in divisors(a0) {
        for den in divisors(an) {
            if num.gcd(&den) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Rational::new(sign * num as i64, den as i64);
                if eval(p, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
