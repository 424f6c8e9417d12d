#include "qfocus/focus.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

namespace qfocus {

namespace {

void require_focusable(const Lens& l, const Gate& g, const State& s) {
  if (!g.is_square()) throw Error(ErrorCode::ShapeMismatch, "only square gates can be focused");
  if (g.in_wires() != l.arity()) {
    throw Error(ErrorCode::ShapeMismatch, "gate acts on " + std::to_string(g.in_wires()) + " wires, lens selects " +
                                              std::to_string(l.arity()));
  }
  if (s.wires() != l.codomain()) {
    throw Error(ErrorCode::ShapeMismatch, "state has " + std::to_string(s.wires()) + " wires, lens targets " +
                                              std::to_string(l.codomain()));
  }
  if (s.alphabet() != g.alphabet()) throw Error(ErrorCode::ShapeMismatch, "gate and state alphabets differ");
}

}  // namespace

BlockTable curry(const Lens& l, const State& s) {
  if (s.wires() != l.codomain()) throw Error(ErrorCode::ShapeMismatch, "curry: state arity differs from lens codomain");
  const std::size_t q = s.alphabet();
  const std::size_t m = l.arity();
  const std::size_t rest = l.codomain() - m;
  BlockTable out(m, q, dimension(rest, q));
  for (std::size_t a = 0; a < out.block_count(); ++a) {
    const Tuple v = decode(a, m, q);
    auto block = out.block(a);
    for (std::size_t b = 0; b < block.size(); ++b) block[b] = s.at(merge(l, v, decode(b, rest, q)));
  }
  return out;
}

State uncurry(const Lens& l, const BlockTable& f, std::size_t q) {
  const std::size_t n = l.codomain();
  const std::size_t rest = n - l.arity();
  if (f.outer_arity() != l.arity() || f.alphabet() != q || f.block_dim() != dimension(rest, q)) {
    throw Error(ErrorCode::ShapeMismatch, "uncurry: table shape does not match the lens");
  }
  const Lens c = l.complement();
  State out = State::zero(n, q);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Tuple t = decode(i, n, q);
    out[i] = f.block(encode(extract(l, t), q))[encode(extract(c, t), q)];
  }
  return out;
}

State dpmerge(const Lens& l, std::span<const Symbol> v, const State& local) {
  if (v.size() != l.codomain() || local.wires() != l.arity()) {
    throw Error(ErrorCode::ShapeMismatch, "dpmerge: arities do not match the lens");
  }
  const std::size_t q = local.alphabet();
  const State rest = ket(extract(l.complement(), v), q);
  // x ↦ x·|extractC v⟩ as a (q^(n-m) × 1) linear map
  const Matrix embed = Eigen::Map<const Eigen::VectorXcd>(rest.amplitudes().data(), static_cast<Eigen::Index>(rest.size()));
  const BlockTable scalars(local.wires(), q, 1, std::vector<Complex>(local.amplitudes().begin(), local.amplitudes().end()));
  return uncurry(l, dpmap(embed, scalars), q);
}

State focus_apply(const Lens& l, const Gate& g, const State& s, const FocusOptions& opts) {
  require_focusable(l, g, s);
  const std::size_t n = l.codomain();
  const std::size_t m = l.arity();
  const std::size_t q = s.alphabet();
  const std::size_t local_dim = dimension(m, q);

  std::vector<std::size_t> stride(n);
  for (std::size_t w = n, acc = 1; w-- > 0; acc *= q) stride[w] = acc;

  // offset of each lens-local basis tuple inside a complement group
  std::vector<std::size_t> offset(local_dim, 0);
  for (std::size_t a = 0; a < local_dim; ++a) {
    std::size_t rem = a;
    for (std::size_t k = m; k-- > 0;) {
      offset[a] += (rem % q) * stride[l[k]];
      rem /= q;
    }
  }
  const Lens c = l.complement();
  std::vector<std::size_t> cstride(c.arity());
  for (std::size_t j = 0; j < c.arity(); ++j) cstride[j] = stride[c[j]];
  const std::size_t groups = s.size() / local_dim;

  // row-major copy of the gate matrix
  std::vector<Complex> mat(local_dim * local_dim);
  for (std::size_t i = 0; i < local_dim; ++i) {
    for (std::size_t j = 0; j < local_dim; ++j) {
      mat[i * local_dim + j] = g.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }

  State out = s;
  Complex* amps = out.amplitudes().data();

  auto run = [&](std::size_t first, std::size_t last) {
    if (first >= last) return;
    // mixed-radix counter over complement wires, seeded at `first`
    std::vector<Symbol> digit(c.arity());
    std::size_t base = 0;
    std::size_t rem = first;
    for (std::size_t j = c.arity(); j-- > 0;) {
      digit[j] = static_cast<Symbol>(rem % q);
      base += digit[j] * cstride[j];
      rem /= q;
    }
    std::vector<Complex> in(local_dim);
    for (std::size_t b = first; b < last; ++b) {
      for (std::size_t a = 0; a < local_dim; ++a) in[a] = amps[base + offset[a]];
      for (std::size_t i = 0; i < local_dim; ++i) {
        const Complex* row = mat.data() + i * local_dim;
        Complex acc{0.0};
        for (std::size_t j = 0; j < local_dim; ++j) acc += row[j] * in[j];
        amps[base + offset[i]] = acc;
      }
      for (std::size_t j = c.arity(); j-- > 0;) {
        base += cstride[j];
        if (++digit[j] < q) break;
        base -= q * cstride[j];
        digit[j] = 0;
      }
    }
  };

  unsigned threads = opts.parallel ? (opts.threads ? opts.threads : std::thread::hardware_concurrency()) : 1;
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, groups));
  if (threads <= 1) {
    run(0, groups);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (groups + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(run, t * chunk, std::min(groups, (t + 1) * chunk));
    }
  }
  return out;
}

State focus_apply_reference(const Lens& l, const Gate& g, const State& s) {
  require_focusable(l, g, s);
  return uncurry(l, apply_module(g, curry(l, s)), s.alphabet());
}

State focus_dpbasis_step(const Lens& l, const Gate& g, std::span<const Symbol> v) {
  if (!g.is_square() || g.in_wires() != l.arity()) {
    throw Error(ErrorCode::ShapeMismatch, "gate arity does not match the lens");
  }
  const std::size_t q = g.alphabet();
  return dpmerge(l, v, g.apply(ket(extract(l, v), q)));
}

Gate focus(const Lens& l, const Gate& g, std::size_t max_wires) {
  const std::size_t q = g.alphabet();
  const std::size_t n = l.codomain();
  const std::size_t dim = dimension(n, q, std::size_t{1} << max_wires);
  Matrix full(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    const State col = focus_apply(l, g, ket(decode(j, n, q), q));
    for (std::size_t i = 0; i < dim; ++i) full(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col[i];
  }
  return Gate(n, n, std::move(full), q);
}

}  // namespace qfocus
