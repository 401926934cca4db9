//! Combinatorial polyhedral 2-spheres.
//!
//! Faces are cyclic vertex lists. Vertex indices are 0-based in memory and
//! 1-based in text and error messages. A face and its reversal describe the
//! same face.

mod coloring;
mod format;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use coloring::{color_faces, Colorings};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Green,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Green => 'g',
            Color::Blue => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'r' => Some(Color::Red),
            'g' => Some(Color::Green),
            'b' => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Green => "green",
            Color::Blue => "blue",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub color: Option<Color>,
}

impl Face {
    pub fn new(vertices: Vec<usize>, color: Option<Color>) -> Self {
        Face { vertices, color }
    }

    /// Unordered edges `(min, max)` around the cycle.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % k];
            (a.min(b), a.max(b))
        })
    }

    pub(crate) fn sorted_support(&self) -> Vec<usize> {
        let mut s = self.vertices.clone();
        s.sort_unstable();
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    n_vertices: usize,
    faces: Vec<Face>,
}

/// Counts reported by [`Polyhedron::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyStats {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    /// Vertex degree → number of vertices with that degree.
    pub degree_histogram: BTreeMap<usize, usize>,
    /// Degree-3 vertices, read as disclination twists.
    pub twist_count: usize,
}

impl PolyStats {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

impl fmt::Display for PolyStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V={} E={} F={} twists={}",
            self.vertices, self.edges, self.faces, self.twist_count
        )
    }
}

/// Face adjacency: faces are nodes, joined when they share an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceGraph {
    neighbors: Vec<Vec<usize>>,
}

impl FaceGraph {
    pub fn neighbors(&self, face: usize) -> &[usize] {
        &self.neighbors[face]
    }

    pub fn len(&self) -> usize {
        self.neighbors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neighbors.is_empty()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.neighbors[a].binary_search(&b).is_ok()
    }
}

impl Polyhedron {
    /// Unvalidated constructor; call [`Polyhedron::validate`] before use.
    pub fn new(n_vertices: usize, faces: Vec<Face>) -> Self {
        Polyhedron { n_vertices, faces }
    }

    /// Faces from 1-based vertex lists.
    pub fn from_one_based(n_vertices: usize, faces: &[(&[usize], Option<Color>)]) -> Self {
        Polyhedron::new(
            n_vertices,
            faces
                .iter()
                .map(|(vs, c)| Face::new(vs.iter().map(|v| v - 1).collect(), *c))
                .collect(),
        )
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn is_colored(&self) -> bool {
        self.faces.iter().all(|f| f.color.is_some())
    }

    pub fn with_colors(&self, colors: &[Color]) -> Polyhedron {
        assert_eq!(colors.len(), self.faces.len());
        let faces = self
            .faces
            .iter()
            .zip(colors)
            .map(|(f, &c)| Face::new(f.vertices.clone(), Some(c)))
            .collect();
        Polyhedron::new(self.n_vertices, faces)
    }

    pub fn without_colors(&self) -> Polyhedron {
        let faces = self
            .faces
            .iter()
            .map(|f| Face::new(f.vertices.clone(), None))
            .collect();
        Polyhedron::new(self.n_vertices, faces)
    }

    /// Each unordered edge with the faces it lies on, sorted by edge.
    pub fn edge_faces(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            for e in f.edges() {
                map.entry(e).or_default().push(i);
            }
        }
        map
    }

    pub fn validate(&self) -> Result<PolyStats> {
        if self.n_vertices == 0 {
            return Err(Error::NoVertices);
        }
        for (i, f) in self.faces.iter().enumerate() {
            if f.vertices.len() < 3 {
                return Err(Error::FaceTooSmall {
                    face: i + 1,
                    len: f.vertices.len(),
                });
            }
            let mut seen = HashSet::new();
            for &v in &f.vertices {
                if v >= self.n_vertices {
                    return Err(Error::VertexOutOfRange {
                        face: i + 1,
                        vertex: v + 1,
                        n_vertices: self.n_vertices,
                    });
                }
                if !seen.insert(v) {
                    return Err(Error::RepeatedVertex {
                        face: i + 1,
                        vertex: v + 1,
                    });
                }
            }
        }

        let edges = self.edge_faces();
        let mut degree = vec![0usize; self.n_vertices];
        for (&(u, v), faces) in &edges {
            if faces.len() != 2 {
                return Err(Error::EdgeMultiplicity {
                    u: u + 1,
                    v: v + 1,
                    count: faces.len(),
                });
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        if let Some(v) = degree.iter().position(|&d| d == 0) {
            return Err(Error::IsolatedVertex(v + 1));
        }

        let stats = PolyStats {
            vertices: self.n_vertices,
            edges: edges.len(),
            faces: self.faces.len(),
            degree_histogram: degree.iter().fold(BTreeMap::new(), |mut h, &d| {
                *h.entry(d).or_insert(0) += 1;
                h
            }),
            twist_count: degree.iter().filter(|&&d| d == 3).count(),
        };
        let chi = stats.euler_characteristic();
        if chi != 2 {
            return Err(Error::EulerCharacteristic(chi));
        }
        Ok(stats)
    }

    /// Vertex degrees (number of incident edges).
    pub fn degrees(&self) -> Vec<usize> {
        let mut degree = vec![0usize; self.n_vertices];
        for &(u, v) in self.edge_faces().keys() {
            degree[u] += 1;
            degree[v] += 1;
        }
        degree
    }

    pub fn face_adjacency(&self) -> FaceGraph {
        let mut neighbors = vec![Vec::new(); self.faces.len()];
        for faces in self.edge_faces().values() {
            for &a in faces {
                for &b in faces {
                    if a != b {
                        neighbors[a].push(b);
                    }
                }
            }
        }
        for n in &mut neighbors {
            n.sort_unstable();
            n.dedup();
        }
        FaceGraph { neighbors }
    }

    /// Glues a pyramid on every face and merges the coplanar triangle
    /// pairs: one apex per face, one quadrilateral `(u, apex f1, v, apex f2)`
    /// per edge `{u, v}` shared by faces `f1 < f2`.
    pub fn rhombify(&self) -> Result<Polyhedron> {
        self.validate()?;
        let apex = |f: usize| self.n_vertices + f;
        let faces = self
            .edge_faces()
            .into_iter()
            .map(|((u, v), fs)| Face::new(vec![u, apex(fs[0]), v, apex(fs[1])], None))
            .collect();
        Ok(Polyhedron::new(self.n_vertices + self.faces.len(), faces))
    }

    /// Vertex bijection `self → other` carrying faces onto faces, if any.
    pub fn find_isomorphism(&self, other: &Polyhedron) -> Option<Vec<usize>> {
        if self.n_vertices != other.n_vertices || self.faces.len() != other.faces.len() {
            return None;
        }
        let n = self.n_vertices;
        let adj_a = vertex_adjacency(self);
        let adj_b = vertex_adjacency(other);
        let deg_a: Vec<usize> = adj_a.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
        let deg_b: Vec<usize> = adj_b.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
        let mut da = deg_a.clone();
        let mut db = deg_b.clone();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return None;
        }
        let faces_b: HashSet<Vec<usize>> = other.faces.iter().map(Face::sorted_support).collect();
        let mut faces_of: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, f) in self.faces.iter().enumerate() {
            for &v in &f.vertices {
                faces_of[v].push(i);
            }
        }

        // Visit vertices so each one (after the first in its component)
        // neighbors an already-placed vertex.
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for start in 0..n {
            if placed[start] {
                continue;
            }
            placed[start] = true;
            order.push(start);
            let mut head = order.len() - 1;
            while head < order.len() {
                let v = order[head];
                head += 1;
                for w in 0..n {
                    if adj_a[v][w] && !placed[w] {
                        placed[w] = true;
                        order.push(w);
                    }
                }
            }
        }

        struct Search<'a> {
            a: &'a Polyhedron,
            adj_a: &'a [Vec<bool>],
            adj_b: &'a [Vec<bool>],
            deg_a: &'a [usize],
            deg_b: &'a [usize],
            faces_b: &'a HashSet<Vec<usize>>,
            faces_of: &'a [Vec<usize>],
            order: &'a [usize],
            map: Vec<Option<usize>>,
            used: Vec<bool>,
        }

        impl Search<'_> {
            fn consistent(&self, v: usize, image: usize) -> bool {
                if self.deg_a[v] != self.deg_b[image] || self.used[image] {
                    return false;
                }
                for (w, m) in self.map.iter().enumerate() {
                    if let Some(m) = *m {
                        if self.adj_a[v][w] != self.adj_b[image][m] {
                            return false;
                        }
                    }
                }
                true
            }

            fn faces_ok(&self, v: usize) -> bool {
                self.faces_of[v].iter().all(|&fi| {
                    let f = &self.a.faces[fi];
                    let imgs: Option<Vec<usize>> = f.vertices.iter().map(|&u| self.map[u]).collect();
                    match imgs {
                        Some(mut s) => {
                            s.sort_unstable();
                            self.faces_b.contains(&s)
                        }
                        None => true,
                    }
                })
            }

            fn run(&mut self, depth: usize) -> bool {
                if depth == self.order.len() {
                    return true;
                }
                let v = self.order[depth];
                for image in 0..self.map.len() {
                    if !self.consistent(v, image) {
                        continue;
                    }
                    self.map[v] = Some(image);
                    self.used[image] = true;
                    if self.faces_ok(v) && self.run(depth + 1) {
                        return true;
                    }
                    self.map[v] = None;
                    self.used[image] = false;
                }
                false
            }
        }

        let mut search = Search {
            a: self,
            adj_a: &adj_a,
            adj_b: &adj_b,
            deg_a: &deg_a,
            deg_b: &deg_b,
            faces_b: &faces_b,
            faces_of: &faces_of,
            order: &order,
            map: vec![None; n],
            used: vec![false; n],
        };
        search
            .run(0)
            .then(|| search.map.into_iter().map(|m| m.unwrap()).collect())
    }

    pub fn builtin(name: &str) -> Result<Polyhedron> {
        match name {
            "cube" => Ok(cube()),
            "rhombic_dodecahedron" | "rd" => Ok(rhombic_dodecahedron()),
            "tetrahedron" => Ok(tetrahedron()),
            _ => Err(Error::UnknownBuiltin(name.to_string())),
        }
    }

    pub fn to_text(&self) -> String {
        format::write(self)
    }
}

impl FromStr for Polyhedron {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        format::parse(s)
    }
}

impl fmt::Display for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn vertex_adjacency(p: &Polyhedron) -> Vec<Vec<bool>> {
    let n = p.n_vertices;
    let mut adj = vec![vec![false; n]; n];
    for f in &p.faces {
        for (u, v) in f.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    adj
}

pub const BUILTIN_NAMES: [&str; 3] = ["cube", "rhombic_dodecahedron", "tetrahedron"];

/// Cube with bottom square 1-2-3-4 and vertex `i + 4` above vertex `i`.
/// Opposite faces share a color.
pub fn cube() -> Polyhedron {
    use Color::*;
    Polyhedron::from_one_based(
        8,
        &[
            (&[1, 2, 3, 4], Some(Red)),
            (&[5, 6, 7, 8], Some(Red)),
            (&[1, 2, 6, 5], Some(Green)),
            (&[3, 4, 8, 7], Some(Green)),
            (&[2, 3, 7, 6], Some(Blue)),
            (&[4, 1, 5, 8], Some(Blue)),
        ],
    )
}

/// Rhombic dodecahedron with faces in check order: red faces carry the X
/// checks, green the Y checks, blue the Z checks. Each rhombus alternates
/// degree-3 and degree-4 vertices.
pub fn rhombic_dodecahedron() -> Polyhedron {
    use Color::*;
    Polyhedron::from_one_based(
        14,
        &[
            (&[1, 6, 3, 2], Some(Red)),
            (&[3, 7, 8, 4], Some(Red)),
            (&[8, 12, 13, 9], Some(Red)),
            (&[1, 14, 13, 10], Some(Red)),
            (&[2, 3, 4, 5], Some(Green)),
            (&[3, 7, 11, 6], Some(Green)),
            (&[5, 10, 13, 9], Some(Green)),
            (&[11, 14, 13, 12], Some(Green)),
            (&[1, 10, 5, 2], Some(Blue)),
            (&[4, 5, 9, 8], Some(Blue)),
            (&[7, 8, 12, 11], Some(Blue)),
            (&[1, 14, 11, 6], Some(Blue)),
        ],
    )
}

pub fn tetrahedron() -> Polyhedron {
    Polyhedron::from_one_based(
        4,
        &[
            (&[1, 2, 3], None),
            (&[1, 2, 4], None),
            (&[1, 3, 4], None),
            (&[2, 3, 4], None),
        ],
    )
}
