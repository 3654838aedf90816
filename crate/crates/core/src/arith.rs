//! Integer helpers: gcd/lcm, modular arithmetic, primality, primitive roots.

/// Greatest common divisor. `gcd(0, n) = n`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple. Panics on overflow.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// `base^exp mod modulus` with 128-bit intermediates.
pub fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus > 0);
    if modulus == 1 {
        return 0;
    }
    let mut acc: u64 = 1;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `n`, when `gcd(a, n) = 1`.
pub fn mod_inv(a: u64, n: u64) -> Option<u64> {
    assert!(n > 0);
    if n == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0u32;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        push(d, &mut n);
        push(d + 2, &mut n);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Multiplicative order of `a` modulo `n`; requires `gcd(a, n) = 1`.
pub fn multiplicative_order(a: u64, n: u64) -> u64 {
    assert!(
        n > 0 && gcd(a % n.max(1), n) == 1,
        "order needs gcd(a, n) = 1"
    );
    if n == 1 {
        return 1;
    }
    let mut x = a % n;
    let mut k = 1u64;
    while x != 1 {
        x = ((x as u128 * (a % n) as u128) % n as u128) as u64;
        k += 1;
    }
    k
}

/// Smallest primitive root modulo the prime `p`. For `p = 2` this is `1`.
pub fn smallest_primitive_root(p: u64) -> u64 {
    assert!(is_prime(p));
    if p == 2 {
        return 1;
    }
    let factors = factorize(p - 1);
    'outer: for g in 2..p {
        for &(q, _) in &factors {
            if mod_pow(g, (p - 1) / q, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

/// `ceil(a / b)` for `b > 0`.
pub fn ceil_div(a: i128, b: i128) -> i128 {
    assert!(b > 0);
    a.div_euclid(b) + if a.rem_euclid(b) != 0 { 1 } else { 0 }
}
