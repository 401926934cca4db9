use super::{Color, FaceGraph, Polyhedron};
use crate::error::{Error, Result};

/// Proper 3-colorings of the face adjacency graph, lexicographic in face
/// order with red < green < blue.
pub struct Colorings {
    graph: FaceGraph,
    ties: Vec<Vec<usize>>,
    assign: Vec<u8>,
    pos: usize,
    done: bool,
}

impl Colorings {
    pub fn new(p: &Polyhedron) -> Self {
        Self::with_ties(p, &[])
    }

    /// Only colorings in which each pair `(a, b)` in `ties` shares a color.
    pub fn with_ties(p: &Polyhedron, ties: &[(usize, usize)]) -> Self {
        let graph = p.face_adjacency();
        let len = graph.len();
        let mut tied = vec![Vec::new(); len];
        for &(a, b) in ties {
            tied[a.max(b)].push(a.min(b));
        }
        Colorings {
            graph,
            ties: tied,
            assign: vec![0; len],
            pos: 0,
            done: false,
        }
    }

    fn conflicts(&self, face: usize, color: u8) -> bool {
        self.graph
            .neighbors(face)
            .iter()
            .any(|&j| j < face && self.assign[j] == color)
            || self.ties[face].iter().any(|&j| self.assign[j] != color)
    }
}

impl Iterator for Colorings {
    type Item = Vec<Color>;

    fn next(&mut self) -> Option<Vec<Color>> {
        if self.done {
            return None;
        }
        let len = self.assign.len();
        if len == 0 {
            self.done = true;
            return Some(Vec::new());
        }
        let mut i = self.pos;
        loop {
            while self.assign[i] < 3 && self.conflicts(i, self.assign[i]) {
                self.assign[i] += 1;
            }
            if self.assign[i] == 3 {
                self.assign[i] = 0;
                if i == 0 {
                    self.done = true;
                    return None;
                }
                i -= 1;
                self.assign[i] += 1;
                continue;
            }
            if i == len - 1 {
                let out = self.assign.iter().map(|&c| Color::ALL[c as usize]).collect();
                self.assign[i] += 1;
                self.pos = i;
                return Some(out);
            }
            i += 1;
            self.assign[i] = 0;
        }
    }
}

/// First proper 3-coloring in lexicographic order.
pub fn color_faces(p: &Polyhedron) -> Result<Polyhedron> {
    p.validate()?;
    match Colorings::new(p).next() {
        Some(colors) => Ok(p.with_colors(&colors)),
        None => Err(Error::NotThreeColorable(obstruction(&p.face_adjacency()))),
    }
}

fn obstruction(g: &FaceGraph) -> String {
    let n = g.len();
    for a in 0..n {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > b && g.adjacent(a, c)) {
                for &d in g.neighbors(c).iter().filter(|&&d| d > c) {
                    if g.adjacent(a, d) && g.adjacent(b, d) {
                        return format!(
                            "faces {}, {}, {}, {} are pairwise adjacent",
                            a + 1,
                            b + 1,
                            c + 1,
                            d + 1
                        );
                    }
                }
            }
        }
    }
    // A face whose neighbors form an odd cycle forces a fourth color.
    for hub in 0..n {
        let ring = g.neighbors(hub);
        if ring.len() % 2 == 1 && ring.len() >= 3 && is_cycle(g, ring) {
            let list: Vec<String> = ring.iter().map(|f| (f + 1).to_string()).collect();
            return format!(
                "face {} is surrounded by an odd cycle of faces {}",
                hub + 1,
                list.join(", ")
            );
        }
    }
    format!("exhaustive search over {n} faces found no coloring")
}

fn is_cycle(g: &FaceGraph, nodes: &[usize]) -> bool {
    nodes.iter().all(|&a| {
        nodes.iter().filter(|&&b| b != a && g.adjacent(a, b)).count() == 2
    })
}
