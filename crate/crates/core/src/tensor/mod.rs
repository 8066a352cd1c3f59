//! Dense f32 tensors and reverse-mode automatic differentiation.
//!
//! Values are row-major `f32`; loss-style reductions accumulate in `f64` so
//! long-sentence averages stay stable. Any op that produces a NaN/Inf fails
//! with [`crate::Error::NonFinite`].

mod gradcheck;
mod graph;
mod optim;

pub use gradcheck::finite_diff_check;
pub use graph::{Graph, Var};
pub use optim::{adam_step, AdamHyper, AdamState};

use crate::error::{Error, Result};
use crate::rng;

/// A dense n-dimensional array of f32 values.
///
/// `grad` is populated for graph leaves after `Graph::backward`; it always
/// mirrors `shape` when present.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f32>,
    pub requires_grad: bool,
    pub grad: Option<Vec<f32>>,
}

pub(crate) fn numel_of(shape: &[usize]) -> usize {
    shape.iter().product()
}

impl Tensor {
    pub fn new(shape: Vec<usize>, data: Vec<f32>) -> Result<Self> {
        if numel_of(&shape) != data.len() {
            return Err(Error::invalid(
                "tensor",
                format!("shape {:?} wants {} values, got {}", shape, numel_of(&shape), data.len()),
            ));
        }
        if shape.iter().any(|&e| e == 0) {
            return Err(Error::invalid("tensor", format!("zero extent in shape {shape:?}")));
        }
        Ok(Tensor {
            shape,
            data,
            requires_grad: false,
            grad: None,
        })
    }

    pub fn zeros(shape: &[usize]) -> Self {
        Tensor {
            data: vec![0.0; numel_of(shape)],
            shape: shape.to_vec(),
            requires_grad: false,
            grad: None,
        }
    }

    pub fn full(shape: &[usize], value: f32) -> Self {
        Tensor {
            data: vec![value; numel_of(shape)],
            shape: shape.to_vec(),
            requires_grad: false,
            grad: None,
        }
    }

    pub fn scalar(value: f32) -> Self {
        Tensor {
            shape: vec![1],
            data: vec![value],
            requires_grad: false,
            grad: None,
        }
    }

    /// Normal(0, std) init.
    pub fn randn<R: rand::Rng>(shape: &[usize], std: f32, rng: &mut R) -> Self {
        let mut t = Tensor::zeros(shape);
        rng::fill_normal(&mut t.data, rng);
        for v in t.data.iter_mut() {
            *v *= std;
        }
        t
    }

    pub fn with_grad(mut self) -> Self {
        self.requires_grad = true;
        self
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Zero the gradient buffer, allocating it if absent.
    pub fn reset_grad(&mut self) {
        match self.grad.as_mut() {
            Some(g) => g.iter_mut().for_each(|v| *v = 0.0),
            None => self.grad = Some(vec![0.0; self.data.len()]),
        }
    }

    pub fn accumulate_grad(&mut self, src: &[f32]) {
        debug_assert_eq!(src.len(), self.data.len());
        let g = self.grad.get_or_insert_with(|| vec![0.0; self.data.len()]);
        for (a, b) in g.iter_mut().zip(src) {
            *a += b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_checks_shape_product() {
        assert!(Tensor::new(vec![2, 3], vec![0.0; 6]).is_ok());
        assert!(Tensor::new(vec![2, 3], vec![0.0; 5]).is_err());
        assert!(Tensor::new(vec![2, 0], vec![]).is_err());
    }

    #[test]
    fn grad_accumulates() {
        let mut t = Tensor::zeros(&[3]);
        t.accumulate_grad(&[1.0, 2.0, 3.0]);
        t.accumulate_grad(&[1.0, 1.0, 1.0]);
        assert_eq!(t.grad.as_deref().unwrap(), &[2.0, 3.0, 4.0]);
        t.reset_grad();
        assert_eq!(t.grad.as_deref().unwrap(), &[0.0, 0.0, 0.0]);
    }
}
