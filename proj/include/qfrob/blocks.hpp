#pragma once

// Block decompositions: the affine Weyl orbit prediction, linkage observed
// through composition series of A1 Weyl modules, the Steinberg tensor
// product check, and the block correspondence for finite triples.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfrob/frobenius.hpp"
#include "qfrob/hopfcore.hpp"
#include "qfrob/rootdata.hpp"

namespace qfrob {

struct BlockRow {
  Weight weight;
  Weight canonical;  // orbit representative, also the block label
  std::size_t block = 0;
  bool singular = false;
  std::optional<SteinbergDecomposition> steinberg;  // dominant weights only
};

struct BlockTable {
  std::string type;
  int ell = 0;
  std::vector<BlockRow> rows;
  std::vector<Weight> labels;  // block index -> canonical representative

  std::size_t block_count() const { return labels.size(); }
  // Weights of each block, in window order.
  std::vector<std::vector<Weight>> blocks() const;
};

// Every weight lo <= lam <= hi (coordinatewise). Block indices follow the
// order of first appearance; labels do not depend on the window.
BlockTable predicted_blocks(const AffineWeyl& w, const Weight& lo, const Weight& hi);

struct LinkageGraph {
  std::vector<long> nodes;
  std::vector<std::pair<long, long>> edges;

  std::vector<std::vector<long>> components() const;
};

// Edges between all composition factors of W(lam) for lo <= lam <= hi.
LinkageGraph observed_blocks_A1(long lo, long hi, const QParams& p);
// Edges lam -- mu where lam is regular and mu is an affine reflection of lam,
// both in the window.
LinkageGraph reflection_chains_A1(long lo, long hi, const QParams& p);

// Observed components lie inside predicted blocks, and equal the
// reflection-chain components.
Report compare_linkage_A1(long lo, long hi, const QParams& p);

// L(lam) against L(lam1) (x) Fr*_sc(V^mu) for A1.
Report steinberg_verify(long lam, const QParams& p);

struct FiniteBlocks {
  std::vector<ComoduleFD> simples_A, simples_a;
  std::vector<std::size_t> ext_A, ext_a;            // Ext^1 components
  std::vector<std::size_t> saturated_A, saturated_a;
  bool condition_star = false;
  std::map<std::size_t, std::size_t> correspondence;  // A-class -> a-class
  Report report;
};

FiniteBlocks finite_block_bijection(const TripleFD& t);

}  // namespace qfrob
