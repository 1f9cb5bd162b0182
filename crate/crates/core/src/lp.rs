//! Thin linear-programming front end over `minilp`.

use minilp::{ComparisonOp, OptimizationDirection, Problem};

use crate::error::{GeomError, Result};

/// A linear program `min c·x` subject to `rows[i].0 · x <= rows[i].1` and box bounds.
pub struct LinearProgram {
    pub objective: Vec<f64>,
    pub bounds: Vec<(f64, f64)>,
    pub rows: Vec<(Vec<f64>, f64)>,
}

impl LinearProgram {
    pub fn new(objective: Vec<f64>) -> Self {
        let n = objective.len();
        Self {
            objective,
            bounds: vec![(f64::NEG_INFINITY, f64::INFINITY); n],
            rows: Vec::new(),
        }
    }

    pub fn le(&mut self, coeffs: Vec<f64>, rhs: f64) -> &mut Self {
        self.rows.push((coeffs, rhs));
        self
    }

    /// Returns `(x, objective)` or a domain error when infeasible/unbounded.
    pub fn minimize(&self) -> Result<(Vec<f64>, f64)> {
        let mut problem = Problem::new(OptimizationDirection::Minimize);
        let vars: Vec<_> = self
            .objective
            .iter()
            .zip(&self.bounds)
            .map(|(&c, &b)| problem.add_var(c, b))
            .collect();
        for (coeffs, rhs) in &self.rows {
            let expr: Vec<_> = vars
                .iter()
                .zip(coeffs)
                .filter(|(_, c)| **c != 0.0)
                .map(|(v, c)| (*v, *c))
                .collect();
            if expr.is_empty() {
                if *rhs < 0.0 {
                    return Err(GeomError::Domain("infeasible constant row".into()));
                }
                continue;
            }
            problem.add_constraint(expr.as_slice(), ComparisonOp::Le, *rhs);
        }
        let solution = problem
            .solve()
            .map_err(|e| GeomError::Domain(format!("linear program: {e}")))?;
        let x: Vec<f64> = vars.iter().map(|v| solution[*v]).collect();
        let obj = solution.objective();
        // Unbounded problems over free variables come back as non-finite values.
        if !obj.is_finite() || x.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::Domain("linear program: problem is unbounded".into()));
        }
        Ok((x, obj))
    }
}
