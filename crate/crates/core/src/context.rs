//! Variable contexts: ordered, uniquely named variables with fixed roles.

use std::fmt;
use std::sync::Arc;

use crate::error::CoreError;

/// The role a variable plays in a cycle polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// Integration variable `X_p` (degree −1).
    X,
    /// Spectral variable `z_j` (degree +1).
    Z,
    /// Anything else: `t`, a current parameter, specialization variables.
    Aux,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
    roles: Vec<Role>,
}

impl VarContext {
    /// Builds a context, rejecting duplicate names.
    pub fn new<S: Into<String>>(vars: Vec<(S, Role)>) -> Result<Arc<Self>, CoreError> {
        let mut names = Vec::with_capacity(vars.len());
        let mut roles = Vec::with_capacity(vars.len());
        for (n, r) in vars {
            let n = n.into();
            if names.contains(&n) {
                return Err(CoreError::DuplicateVariable(n));
            }
            names.push(n);
            roles.push(r);
        }
        Ok(Arc::new(VarContext { names, roles }))
    }

    /// `X1..Xl` followed by `z1..zN` followed by the given auxiliaries.
    pub fn cycle_with_aux(l: usize, n: usize, aux: &[&str]) -> Arc<Self> {
        let mut vars: Vec<(String, Role)> = Vec::new();
        if l == 1 {
            vars.push(("X".to_string(), Role::X));
        } else {
            for p in 1..=l {
                vars.push((format!("X{}", p), Role::X));
            }
        }
        for j in 1..=n {
            vars.push((format!("z{}", j), Role::Z));
        }
        for a in aux {
            vars.push((a.to_string(), Role::Aux));
        }
        VarContext::new(vars).expect("generated names are unique")
    }

    /// The context of `C_{N,l}`: `X1..Xl, z1..zN`.
    pub fn cycle(l: usize, n: usize) -> Arc<Self> {
        Self::cycle_with_aux(l, n, &[])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn role(&self, i: usize) -> Role {
        self.roles[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, CoreError> {
        self.index_of(name).ok_or_else(|| CoreError::UnknownVariable(name.to_string()))
    }

    /// Indices of the variables with the given role, in context order.
    pub fn indices_with_role(&self, role: Role) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.roles[i] == role).collect()
    }

    pub fn x_indices(&self) -> Vec<usize> {
        self.indices_with_role(Role::X)
    }

    pub fn z_indices(&self) -> Vec<usize> {
        self.indices_with_role(Role::Z)
    }
}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(","))
    }
}

/// Compares two contexts, cheaply when they share an allocation.
pub fn same_context(a: &Arc<VarContext>, b: &Arc<VarContext>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
