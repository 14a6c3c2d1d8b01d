//! Arithmetic over `F_p` for a word-sized prime `p`, plus the small pieces
//! of polynomial and matrix algebra used by the eigenvalue method:
//! characteristic polynomials, root extraction and nullspaces.

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p { s - p } else { s }
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b { a - b } else { a + p - b }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `p` with `p = 1 (mod e)` and `p > min`.
pub fn splitting_prime(e: u64, min: u64) -> u64 {
    let mut k = min / e + 1;
    loop {
        let p = k * e + 1;
        if p > min && is_prime(p) {
            return p;
        }
        k += 1;
    }
}

fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A fixed primitive `e`-th root of unity in `F_p` (requires `e | p-1`).
pub fn root_of_unity_mod(e: u64, p: u64) -> u64 {
    let primes = factorize(p - 1);
    let mut g = 2u64;
    loop {
        if primes.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1) {
            return pow_mod(g, (p - 1) / e, p);
        }
        g += 1;
    }
}

// -- dense polynomials over F_p, low-to-high coefficients --

fn poly_trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo `m` (`m` need not be monic).
pub fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    if dm == 0 {
        return vec![0];
    }
    let lead_inv = inv_mod(m[dm], p);
    while r.len() - 1 >= dm && !(r.len() == 1 && r[0] == 0) {
        let shift = r.len() - 1 - dm;
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        for j in 0..=dm {
            let idx = shift + j;
            r[idx] = sub_mod(r[idx], mul_mod(c, m[j], p), p);
        }
        poly_trim(&mut r);
        if r.len() - 1 < dm {
            break;
        }
    }
    r
}

pub fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !(y.len() == 1 && y[0] == 0) {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    // monic normalization
    let inv = inv_mod(*x.last().unwrap(), p);
    for c in &mut x {
        *c = mul_mod(*c, inv, p);
    }
    x
}

/// `x^exp mod m`.
pub fn poly_x_pow_mod(mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = poly_rem(&[0, 1], m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &base, p), m, p);
        }
        base = poly_rem(&poly_mul(&base, &base, p), m, p);
        exp >>= 1;
    }
    acc
}

/// `(x + a)^exp mod m`.
fn poly_shifted_pow_mod(a: u64, mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = poly_rem(&[a, 1], m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &base, p), m, p);
        }
        base = poly_rem(&poly_mul(&base, &base, p), m, p);
        exp >>= 1;
    }
    acc
}

/// All roots in `F_p` of a polynomial known to split into distinct linear
/// factors (equal-degree splitting with a deterministic shift sequence).
pub fn linear_roots(f: &[u64], p: u64) -> Vec<u64> {
    let mut roots = Vec::new();
    let mut stack = vec![f.to_vec()];
    let mut shift = 1u64;
    while let Some(g) = stack.pop() {
        let d = g.len() - 1;
        if d == 0 {
            continue;
        }
        if d == 1 {
            // g = c0 + c1 x, root = -c0/c1
            let r = mul_mod(sub_mod(0, g[0], p), inv_mod(g[1], p), p);
            roots.push(r);
            continue;
        }
        // split off the roots r with (r + shift) a quadratic residue
        let h = poly_shifted_pow_mod(shift, (p - 1) / 2, &g, p);
        shift += 1;
        let mut h1 = h.clone();
        h1[0] = sub_mod(h1[0], 1, p);
        let g1 = poly_gcd(&g, &h1, p);
        let d1 = g1.len() - 1;
        if d1 == 0 || d1 == d {
            stack.push(g);
            continue;
        }
        let g2 = poly_exact_div(&g, &g1, p);
        stack.push(g1);
        stack.push(g2);
    }
    roots.sort_unstable();
    roots
}

fn poly_exact_div(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let da = r.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    let mut q = vec![0u64; da - db + 1];
    for i in (0..=da - db).rev() {
        let c = mul_mod(r[i + db], lead_inv, p);
        q[i] = c;
        if c != 0 {
            for j in 0..=db {
                r[i + j] = sub_mod(r[i + j], mul_mod(c, b[j], p), p);
            }
        }
    }
    q
}

// -- dense matrices over F_p --

pub fn mat_det(a: &[Vec<u64>], p: u64) -> u64 {
    let n = a.len();
    let mut m: Vec<Vec<u64>> = a.to_vec();
    let mut det = 1u64;
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] != 0);
        let pivot = match pivot {
            Some(r) => r,
            None => return 0,
        };
        if pivot != col {
            m.swap(pivot, col);
            det = sub_mod(0, det, p);
        }
        det = mul_mod(det, m[col][col], p);
        let inv = inv_mod(m[col][col], p);
        for r in col + 1..n {
            if m[r][col] == 0 {
                continue;
            }
            let factor = mul_mod(m[r][col], inv, p);
            for c in col..n {
                let t = mul_mod(factor, m[col][c], p);
                m[r][c] = sub_mod(m[r][c], t, p);
            }
        }
    }
    det
}

/// Characteristic polynomial `det(xI - A)` by evaluation at `n+1` points
/// and Lagrange interpolation; low-to-high, monic.
pub fn charpoly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let pts: Vec<u64> = (0..=n as u64).collect();
    let vals: Vec<u64> = pts
        .iter()
        .map(|&x| {
            let m: Vec<Vec<u64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let d = if i == j { x } else { 0 };
                            sub_mod(d, a[i][j], p)
                        })
                        .collect()
                })
                .collect();
            mat_det(&m, p)
        })
        .collect();
    lagrange(&pts, &vals, p)
}

fn lagrange(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut out = vec![0u64; n];
    for i in 0..n {
        if ys[i] == 0 {
            continue;
        }
        // numerator polynomial prod_{j != i} (x - x_j)
        let mut num = vec![1u64];
        let mut denom = 1u64;
        for j in 0..n {
            if j == i {
                continue;
            }
            num = poly_mul(&num, &[sub_mod(0, xs[j], p), 1], p);
            denom = mul_mod(denom, sub_mod(xs[i], xs[j], p), p);
        }
        let c = mul_mod(ys[i], inv_mod(denom, p), p);
        for (k, v) in num.iter().enumerate() {
            out[k] = add_mod(out[k], mul_mod(c, *v, p), p);
        }
    }
    out
}

/// A basis of the nullspace of `a` (rows are basis vectors).
pub fn nullspace(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<u64>> = a.to_vec();
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| m[r][col] != 0);
        let pivot = match pivot {
            Some(r) => r,
            None => continue,
        };
        m.swap(pivot, rank);
        let inv = inv_mod(m[rank][col], p);
        for c in col..cols {
            m[rank][c] = mul_mod(m[rank][c], inv, p);
        }
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for c in col..cols {
                    let t = mul_mod(factor, m[rank][c], p);
                    m[r][c] = sub_mod(m[r][c], t, p);
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for col in 0..cols {
            let r = pivot_of_col[col];
            if r != usize::MAX {
                v[col] = sub_mod(0, m[r][free], p);
            }
        }
        basis.push(v);
    }
    basis
}

/// Integer square root of a perfect square; panics otherwise.
pub fn exact_isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    assert_eq!(r * r, n, "{n} is not a perfect square");
    r
}
