//! Independent oracles shared by the integration tests. Nothing here calls the
//! routines under test except for parsing.
#![allow(dead_code)]

use std::collections::HashMap;
use std::f64::consts::PI;

use linkspec::algebra::rational::to_f64;
use linkspec::algebra::{rat, QMatrix, Rational};
use nalgebra::{Complex, DMatrix};
use serde_json::Value;

pub fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn torus_formula(p: i64, q: i64) -> Vec<Rational> {
    let mut v: Vec<Rational> = (1..p).flat_map(|i| (1..q).map(move |j| rat(i, p) + rat(j, q))).collect();
    v.sort();
    v
}

/// Signature and nullity of `(1−ζ)S + (1−ζ̄)Sᵀ` from floating point eigenvalues.
pub fn numeric_signature(s: &QMatrix, x: &Rational) -> (i64, usize) {
    let n = s.rows();
    if n == 0 {
        return (0, 0);
    }
    let t = 2.0 * PI * to_f64(x);
    let z = Complex::new(t.cos(), t.sin());
    let one = Complex::new(1.0, 0.0);
    let m = DMatrix::from_fn(n, n, |i, j| {
        let a = to_f64(&s[(i, j)]);
        let b = to_f64(&s[(j, i)]);
        (one - z) * a + (one - z.conj()) * b
    });
    let eig = m.symmetric_eigen().eigenvalues;
    let tol = 1e-7 * (1.0 + eig.iter().fold(0.0f64, |a, e| a.max(e.abs())));
    let (mut plus, mut minus, mut zero) = (0i64, 0i64, 0usize);
    for e in eig.iter() {
        if *e > tol {
            plus += 1;
        } else if *e < -tol {
            minus += 1;
        } else {
            zero += 1;
        }
    }
    (plus - minus, zero)
}

/// Count of positive, negative and zero eigenvalues of a symmetric rational matrix.
pub fn numeric_inertia(m: &QMatrix) -> (usize, usize, usize) {
    let n = m.rows();
    let a = DMatrix::from_fn(n, n, |i, j| to_f64(&m[(i, j)]));
    let eig = a.symmetric_eigen().eigenvalues;
    let tol = 1e-7 * (1.0 + eig.iter().fold(0.0f64, |a, e| a.max(e.abs())));
    let plus = eig.iter().filter(|e| **e > tol).count();
    let minus = eig.iter().filter(|e| **e < -tol).count();
    (plus, minus, n - plus - minus)
}

/// A splice diagram rebuilt from its JSON form.
pub struct Tree {
    pub ids: Vec<String>,
    pub kind: Vec<String>,
    pub mult: Vec<i64>,
    /// `adj[v]` holds `(neighbour, weight at v on that edge)`.
    pub adj: Vec<Vec<(usize, i64)>>,
}

impl Tree {
    pub fn from_value(v: &Value) -> Tree {
        let verts = v["vertices"].as_array().unwrap();
        let ids: Vec<String> = verts.iter().map(|x| x["id"].as_str().unwrap().to_string()).collect();
        let index: HashMap<&str, usize> = ids.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let kind = verts.iter().map(|x| x["kind"].as_str().unwrap().to_string()).collect();
        let mult = verts.iter().map(|x| x.get("multiplicity").and_then(Value::as_i64).unwrap_or(0)).collect();
        let mut adj = vec![Vec::new(); ids.len()];
        for e in v["edges"].as_array().unwrap() {
            let a = index[e["a"].as_str().unwrap()];
            let b = index[e["b"].as_str().unwrap()];
            let wa = e.get("weight_at_a").and_then(Value::as_i64).unwrap_or(1);
            let wb = e.get("weight_at_b").and_then(Value::as_i64).unwrap_or(1);
            adj[a].push((b, wa));
            adj[b].push((a, wb));
        }
        Tree { ids, kind, mult, adj }
    }

    pub fn arrowheads(&self) -> Vec<usize> {
        (0..self.ids.len()).filter(|&v| self.kind[v] == "arrowhead").collect()
    }

    fn path(&self, a: usize, b: usize) -> Vec<usize> {
        let mut prev = vec![usize::MAX; self.ids.len()];
        let mut stack = vec![a];
        prev[a] = a;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut p = vec![b];
        while *p.last().unwrap() != a {
            p.push(prev[*p.last().unwrap()]);
        }
        p.reverse();
        p
    }

    /// Product over the geodesic of the weights off the geodesic.
    pub fn linking(&self, a: usize, b: usize) -> Rational {
        let p = self.path(a, b);
        let mut prod = rat(1, 1);
        for (i, &v) in p.iter().enumerate() {
            for &(w, wt) in &self.adj[v] {
                let on = (i > 0 && p[i - 1] == w) || (i + 1 < p.len() && p[i + 1] == w);
                if !on {
                    prod *= rat(wt, 1);
                }
            }
        }
        prod
    }

    /// `lk(L_i, L_j)` with the diagonal from `lk(L_i, Σ n_j L_j) = 0`.
    pub fn linking_matrix(&self) -> QMatrix {
        let arrows = self.arrowheads();
        let nu = arrows.len();
        let mut m = QMatrix::zeros(nu, nu);
        for i in 0..nu {
            let mut l = rat(0, 1);
            for j in 0..nu {
                if i != j {
                    m[(i, j)] = self.linking(arrows[i], arrows[j]);
                    l += &m[(i, j)] * rat(self.mult[arrows[j]], 1);
                }
            }
            m[(i, i)] = -l / rat(self.mult[arrows[i]], 1);
        }
        m
    }
}
