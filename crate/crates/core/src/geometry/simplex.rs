//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Variables are nonnegative; callers split free variables themselves.

use num_traits::{One, Signed, Zero};

use super::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RowKind {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub(crate) struct LpRow {
    pub coeffs: Vec<Rational>,
    pub kind: RowKind,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal {
        point: Vec<Rational>,
        value: Rational,
    },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    obj: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v = &*v / &p;
                }
            }
        }
        let pivot_row = self.rows[r].clone();
        let nz: Vec<usize> = (0..=self.ncols)
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] -= &f * &pivot_row[j];
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for &j in &nz {
                self.obj[j] -= &f * &pivot_row[j];
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes the objective row over columns `< allowed`. Returns false if unbounded.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    /// Sets the objective row to `-c` and prices out the basic columns.
    fn set_objective(&mut self, costs: &[Rational]) {
        let mut obj = vec![Rational::zero(); self.ncols + 1];
        for (j, c) in costs.iter().enumerate() {
            obj[j] = -c.clone();
        }
        for (i, &b) in self.basis.iter().enumerate() {
            if obj[b].is_zero() {
                continue;
            }
            let f = obj[b].clone();
            for (j, v) in self.rows[i].iter().enumerate() {
                if !v.is_zero() {
                    obj[j] -= &f * v;
                }
            }
        }
        self.obj = obj;
    }
}

/// Maximizes `objective · x` over `x ≥ 0` subject to `rows`.
pub(crate) fn maximize(nvars: usize, objective: &[Rational], rows: &[LpRow]) -> LpOutcome {
    debug_assert_eq!(objective.len(), nvars);
    let mut norm: Vec<(Vec<Rational>, RowKind, Rational)> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.coeffs.len(), nvars);
            if r.rhs.is_negative() {
                let kind = match r.kind {
                    RowKind::Le => RowKind::Ge,
                    RowKind::Ge => RowKind::Le,
                    RowKind::Eq => RowKind::Eq,
                };
                (r.coeffs.iter().map(|v| -v).collect(), kind, -r.rhs.clone())
            } else {
                (r.coeffs.clone(), r.kind, r.rhs.clone())
            }
        })
        .collect();

    let n_slack = norm.iter().filter(|r| r.1 != RowKind::Eq).count();
    let n_art = norm.iter().filter(|r| r.1 != RowKind::Le).count();
    let first_art = nvars + n_slack;
    let ncols = first_art + n_art;

    let mut tab_rows = Vec::with_capacity(norm.len());
    let mut basis = Vec::with_capacity(norm.len());
    let (mut s, mut a) = (nvars, first_art);
    for (coeffs, kind, rhs) in norm.drain(..) {
        let mut row = vec![Rational::zero(); ncols + 1];
        for (j, v) in coeffs.into_iter().enumerate() {
            row[j] = v;
        }
        row[ncols] = rhs;
        match kind {
            RowKind::Le => {
                row[s] = Rational::one();
                basis.push(s);
                s += 1;
            }
            RowKind::Ge => {
                row[s] = -Rational::one();
                s += 1;
                row[a] = Rational::one();
                basis.push(a);
                a += 1;
            }
            RowKind::Eq => {
                row[a] = Rational::one();
                basis.push(a);
                a += 1;
            }
        }
        tab_rows.push(row);
    }
    let mut t = Tableau {
        rows: tab_rows,
        obj: Vec::new(),
        basis,
        ncols,
    };

    if n_art > 0 {
        let mut costs = vec![Rational::zero(); ncols];
        for c in costs.iter_mut().skip(first_art) {
            *c = -Rational::one();
        }
        t.set_objective(&costs);
        t.run(ncols);
        if t.obj[ncols].is_negative() {
            return LpOutcome::Infeasible;
        }
        // Drive zero-valued artificials out of the basis, dropping redundant rows.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= first_art {
                match (0..first_art).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => {
                        t.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }

    let mut costs = vec![Rational::zero(); ncols];
    costs[..nvars].clone_from_slice(objective);
    t.set_objective(&costs);
    if !t.run(first_art) {
        return LpOutcome::Unbounded;
    }
    let mut point = vec![Rational::zero(); nvars];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < nvars {
            point[b] = t.rhs(i).clone();
        }
    }
    LpOutcome::Optimal {
        point,
        value: t.obj[ncols].clone(),
    }
}
