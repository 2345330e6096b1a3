//! Maximum flow by Dinic's algorithm.
//!
//! Arcs are stored in pairs: arc `e` and its residual twin `e ^ 1`. The flow
//! carried by a forward arc is the residual capacity of its twin, so no
//! separate flow array is kept. Adjacency is compressed (CSR) once all arcs
//! are in, which keeps the per-arc footprint at three `u32`s.
//!
//! Blocking flows are found with an explicit path stack rather than recursion,
//! since residual paths through the middle layer can be as long as the
//! network.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcId(u32);

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    nodes: usize,
    to: Vec<u32>,
    cap: Vec<u32>,
    tail: Vec<u32>,
    start: Vec<u32>,
    order: Vec<u32>,
    sealed: bool,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            nodes,
            to: Vec::new(),
            cap: Vec::new(),
            tail: Vec::new(),
            start: Vec::new(),
            order: Vec::new(),
            sealed: false,
        }
    }

    pub fn with_capacity(nodes: usize, arcs: usize) -> Self {
        let mut net = Self::new(nodes);
        net.to.reserve(2 * arcs);
        net.cap.reserve(2 * arcs);
        net.tail.reserve(2 * arcs);
        net
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u32) -> ArcId {
        assert!(from < self.nodes && to < self.nodes, "arc endpoint out of range");
        let id = self.to.len() as u32;
        self.to.extend([to as u32, from as u32]);
        self.tail.extend([from as u32, to as u32]);
        self.cap.extend([cap, 0]);
        self.sealed = false;
        ArcId(id)
    }

    fn seal(&mut self) {
        if self.sealed {
            return;
        }
        let mut start = vec![0u32; self.nodes + 1];
        for &t in &self.tail {
            start[t as usize + 1] += 1;
        }
        for v in 0..self.nodes {
            start[v + 1] += start[v];
        }
        let mut fill = start.clone();
        let mut order = vec![0u32; self.tail.len()];
        for (e, &t) in self.tail.iter().enumerate() {
            order[fill[t as usize] as usize] = e as u32;
            fill[t as usize] += 1;
        }
        self.start = start;
        self.order = order;
        self.sealed = true;
    }

    /// Flow currently carried by a forward arc.
    pub fn flow(&self, arc: ArcId) -> u32 {
        self.cap[arc.0 as usize ^ 1]
    }

    /// Capacity of a forward arc, including what is already in use.
    pub fn capacity(&self, arc: ArcId) -> u32 {
        self.cap[arc.0 as usize] + self.cap[arc.0 as usize ^ 1]
    }

    /// Resets a forward arc to capacity `cap` and zero flow.
    pub fn set_capacity(&mut self, arc: ArcId, cap: u32) {
        self.cap[arc.0 as usize] = cap;
        self.cap[arc.0 as usize ^ 1] = 0;
    }

    /// Pushes the maximum flow from `source` to `sink` on top of whatever flow
    /// the network already carries and returns the amount added.
    pub fn max_flow(&mut self, source: usize, sink: usize) -> u64 {
        assert!(source != sink, "source and sink coincide");
        self.seal();
        let mut level = vec![UNREACHED; self.nodes];
        let mut next = vec![0u32; self.nodes];
        let mut queue = VecDeque::with_capacity(self.nodes);
        let mut path: Vec<u32> = Vec::new();
        let mut total = 0u64;

        while self.levels(source, sink, &mut level, &mut queue) {
            next.copy_from_slice(&self.start[..self.nodes]);
            path.clear();
            let mut u = source;
            loop {
                if u == sink {
                    let push = path.iter().map(|&e| self.cap[e as usize]).min().unwrap_or(0);
                    let mut retreat_to = None;
                    for (k, &e) in path.iter().enumerate() {
                        self.cap[e as usize] -= push;
                        self.cap[e as usize ^ 1] += push;
                        if retreat_to.is_none() && self.cap[e as usize] == 0 {
                            retreat_to = Some(k);
                        }
                    }
                    total += push as u64;
                    // Resume from the tail of the first saturated arc.
                    let k = retreat_to.unwrap_or(0);
                    path.truncate(k);
                    u = self.path_end(path.last().copied(), source);
                    continue;
                }
                match self.advance(u, &level, &mut next) {
                    Some(e) => {
                        path.push(e);
                        u = self.to[e as usize] as usize;
                    }
                    None => {
                        if u == source {
                            break;
                        }
                        level[u] = UNREACHED;
                        let e = path.pop().expect("non-source node on empty path");
                        u = self.tail[e as usize] as usize;
                        next[u] += 1;
                    }
                }
            }
        }
        total
    }

    fn path_end(&self, last: Option<u32>, source: usize) -> usize {
        match last {
            Some(e) => self.to[e as usize] as usize,
            None => source,
        }
    }

    fn advance(&self, u: usize, level: &[u32], next: &mut [u32]) -> Option<u32> {
        let end = self.start[u + 1];
        while next[u] < end {
            let e = self.order[next[u] as usize];
            let v = self.to[e as usize] as usize;
            if self.cap[e as usize] > 0 && level[v] != UNREACHED && level[v] == level[u] + 1 {
                return Some(e);
            }
            next[u] += 1;
        }
        None
    }

    fn levels(&self, source: usize, sink: usize, level: &mut [u32], queue: &mut VecDeque<usize>) -> bool {
        level.fill(UNREACHED);
        level[source] = 0;
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for k in self.start[u]..self.start[u + 1] {
                let e = self.order[k as usize] as usize;
                let v = self.to[e] as usize;
                if self.cap[e] > 0 && level[v] == UNREACHED {
                    level[v] = level[u] + 1;
                    if v == sink {
                        return true;
                    }
                    queue.push_back(v);
                }
            }
        }
        level[sink] != UNREACHED
    }
}
