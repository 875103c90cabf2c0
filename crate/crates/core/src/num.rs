//! Integer utilities: primality, factorization, prime-power splitting.
//!
//! Everything here works on `u128` so that group orders q^6 - 1 stay exact
//! for every supported field size (q <= 2^16).

/// Modular multiplication that never overflows, via double-and-add.
fn mul_mod(mut a: u128, mut b: u128, m: u128) -> u128 {
    // Fast path when the product fits in 128 bits.
    if a.leading_zeros() + b.leading_zeros() >= 128 {
        return a.wrapping_mul(b) % m;
    }
    let mut acc = 0u128;
    a %= m;
    while b > 0 {
        if b & 1 == 1 {
            acc = (acc + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    acc
}

fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Miller-Rabin. Deterministic for n < 2^64 with the fixed base set; for
/// larger n the same bases make a practically reliable compositeness test,
/// which is all the factorization path needs.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'bases: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Pollard's rho (Brent variant); `n` must be odd, composite, and not a
/// prime power of a tiny prime (trial division runs first).
fn pollard_rho(n: u128) -> u128 {
    let mut c = 1u128;
    loop {
        let f = |x: u128| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u128;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Full factorization, sorted by prime, as (prime, exponent) pairs.
pub fn factor(mut n: u128) -> Vec<(u128, u32)> {
    let mut out: Vec<(u128, u32)> = Vec::new();
    let push = |p: u128, out: &mut Vec<(u128, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    };
    for p in 2u128.. {
        if p * p > n || p > 100_000 {
            break;
        }
        while n % p == 0 {
            push(p, &mut out);
            n /= p;
        }
    }
    // What remains has no factor below 1e5; peel it with rho + recursion.
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            push(m, &mut out);
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    out.sort_unstable();
    out
}

/// Distinct prime divisors of `n`.
pub fn prime_divisors(n: u128) -> Vec<u128> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

/// Writes q = p^e with p prime, if possible.
pub fn prime_power_split(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let fs = factor(q as u128);
    if fs.len() != 1 {
        return None;
    }
    let (p, e) = fs[0];
    Some((p as u64, e))
}
