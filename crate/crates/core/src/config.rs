use serde::Serialize;

/// Size guardrails for the exhaustive algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub max_group_order: usize,
    pub max_holomorph_order: usize,
    pub max_structure_order: usize,
    pub max_system_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_group_order: 24,
            max_holomorph_order: 10_000,
            max_structure_order: 16,
            max_system_vertices: 64,
        }
    }
}

impl Caps {
    pub fn check_group(&self, order: usize) -> crate::Result<()> {
        if order > self.max_group_order {
            return Err(crate::Error::OrderCapExceeded { what: "group", order, cap: self.max_group_order });
        }
        Ok(())
    }
}
