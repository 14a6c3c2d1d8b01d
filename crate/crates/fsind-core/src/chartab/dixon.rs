//! Exact character tables of nonabelian subgroups by the modular
//! eigenvalue method.
//!
//! Class-sum structure constants are computed over `F_p` for a prime
//! `p = 1 (mod exp(G))`, `p > 2|G|`. A random linear combination of the
//! class-sum matrices has, with overwhelming probability, `k` distinct
//! eigenvalues whose eigenvectors are the central character vectors; the
//! exact cyclotomic values are recovered from the mod-`p` table by a
//! discrete Fourier transform over the power maps of each class.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::modp::*;
use super::ChartabError;
use crate::cyclo::Cyclotomic;
use crate::perm::{ConjClass, Permutation, Subgroup};

pub fn characters(
    sub: &Subgroup,
    classes: &[ConjClass],
    class_of: &HashMap<Permutation, usize>,
) -> Result<(Vec<u64>, Vec<Vec<Cyclotomic>>), ChartabError> {
    let k = classes.len();
    let g_order = sub.order() as u64;
    let e = sub.exponent();
    let p = splitting_prime(e, 2 * g_order);
    let omega = root_of_unity_mod(e, p);

    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
    let inv_class: Vec<usize> = classes
        .iter()
        .map(|c| class_of[&c.representative.inverse()])
        .collect();

    // structure constants a[i][j][l] = #{(x,y) in C_i x C_j : xy = z_l}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for x in &sub.elements {
        let i = class_of[x];
        let xinv = x.inverse();
        for (l, cls) in classes.iter().enumerate() {
            let j = class_of[&xinv.mul(&cls.representative)];
            a[i][j][l] += 1;
        }
    }

    // first slot of a gives the matrix of the class sum C_i acting on the
    // span of central characters; split a random combination of them
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let omegas: Vec<Vec<u64>> = 'attempt: {
        for _ in 0..32 {
            let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
            let mut m = vec![vec![0u64; k]; k];
            for i in 0..k {
                for j in 0..k {
                    for l in 0..k {
                        if a[i][j][l] != 0 {
                            m[j][l] = add_mod(m[j][l], mul_mod(coeffs[i], a[i][j][l] % p, p), p);
                        }
                    }
                }
            }
            let f = charpoly(&m, p);
            let roots = linear_roots(&poly_gcd(&f, &poly_sub_xp(&f, p), p), p);
            if roots.len() != k {
                continue;
            }
            let mut vecs = Vec::with_capacity(k);
            let mut ok = true;
            for &lambda in &roots {
                let shifted: Vec<Vec<u64>> = (0..k)
                    .map(|r| {
                        (0..k)
                            .map(|c| {
                                if r == c {
                                    sub_mod(m[r][c], lambda, p)
                                } else {
                                    m[r][c]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ns = nullspace(&shifted, p);
                if ns.len() != 1 || ns[0][0] == 0 {
                    ok = false;
                    break;
                }
                // normalize so the identity-class entry is 1
                let inv = inv_mod(ns[0][0], p);
                vecs.push(ns[0].iter().map(|&v| mul_mod(v, inv, p)).collect());
            }
            if ok {
                break 'attempt vecs;
            }
        }
        return Err(ChartabError::EigenSplit(sub.order()));
    };

    // degrees: 1/d^2 = (1/|G|) sum_j w(j) w(j*) / |C_j|
    let g_inv = inv_mod(g_order % p, p);
    let mut degrees = Vec::with_capacity(k);
    let mut residues = Vec::with_capacity(k); // chi(g_j) mod p per row
    for w in &omegas {
        let mut s = 0u64;
        for j in 0..k {
            let t = mul_mod(w[j], w[inv_class[j]], p);
            s = add_mod(s, mul_mod(t, inv_mod(sizes[j] % p, p), p), p);
        }
        let d2 = mul_mod(inv_mod(mul_mod(s, g_inv, p), p), 1, p);
        let d = exact_isqrt(d2);
        let row: Vec<u64> = (0..k)
            .map(|j| mul_mod(mul_mod(d % p, w[j], p), inv_mod(sizes[j] % p, p), p))
            .collect();
        degrees.push(d);
        residues.push(row);
    }

    // lift each residue to an exact cyclotomic value through the
    // eigenvalue multiplicities m_t of the representing matrix
    let mut values = vec![Vec::with_capacity(k); k];
    for j in 0..k {
        let g = &classes[j].representative;
        let o = g.order();
        let zeta = pow_mod(omega, e / o, p); // order o
        let power_class: Vec<usize> = {
            let mut v = Vec::with_capacity(o as usize);
            let mut gp = Permutation::identity(sub.parent_degree);
            for _ in 0..o {
                v.push(class_of[&gp]);
                gp = gp.mul(g);
            }
            v
        };
        let o_inv = inv_mod(o % p, p);
        for (row, res) in residues.iter().enumerate() {
            let mut val = Cyclotomic::zero();
            let mut total = 0u64;
            for t in 0..o {
                let mut acc = 0u64;
                for (s, &cls) in power_class.iter().enumerate() {
                    let z = pow_mod(zeta, (o - t) * s as u64 % o, p);
                    acc = add_mod(acc, mul_mod(res[cls], z, p), p);
                }
                let m_t = mul_mod(acc, o_inv, p);
                if m_t > degrees[row] {
                    return Err(ChartabError::LiftFailed(sub.order()));
                }
                total += m_t;
                if m_t != 0 {
                    val = val.add(&Cyclotomic::root_of_unity(o, t).scale_int(m_t as i64));
                }
            }
            if total != degrees[row] {
                return Err(ChartabError::LiftFailed(sub.order()));
            }
            values[row].push(val);
        }
    }
    Ok((degrees, values))
}

/// `x^p - x` reduced enough to share roots with `f`: returns
/// `gcd`-ready representative `x^p mod f - x`.
fn poly_sub_xp(f: &[u64], p: u64) -> Vec<u64> {
    let mut g = poly_x_pow_mod(p, f, p);
    if g.len() < 2 {
        g.resize(2, 0);
    }
    g[1] = sub_mod(g[1], 1, p);
    while g.len() > 1 && *g.last().unwrap() == 0 {
        g.pop();
    }
    if g.iter().all(|&c| c == 0) {
        // x^p = x identically mod f: every root of f is in F_p
        return f.to_vec();
    }
    g
}
