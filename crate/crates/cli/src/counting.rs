use std::cell::Cell;

use convexham::{Edge, SimpleDrawing, Vertex};

/// Counts crossing queries made against the wrapped drawing.
pub struct Counting<D> {
    inner: D,
    queries: Cell<u64>,
}

impl<D: SimpleDrawing> Counting<D> {
    pub fn new(inner: D) -> Self {
        Self {
            inner,
            queries: Cell::new(0),
        }
    }

    pub fn queries(&self) -> u64 {
        self.queries.get()
    }
}

impl<D: SimpleDrawing> SimpleDrawing for Counting<D> {
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn rotation(&self, v: Vertex) -> &[Vertex] {
        self.inner.rotation(v)
    }

    fn crosses(&self, e: Edge, f: Edge) -> bool {
        self.queries.set(self.queries.get() + 1);
        self.inner.crosses(e, f)
    }
}
