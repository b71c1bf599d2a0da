// Selection functions, quantifiers, and their products.
//
// A selection function picks a candidate given a valuation of candidates; a
// quantifier returns the attained value instead. Selection functions form a
// monad, and the monadic bind is what turns per-move choices into a choice of
// whole plays: each selector in a product anticipates the choices of the
// selectors that follow it, which is minimax in disguise.
//
// Two product formulations live here. `pair_product` / `sequence_product` are
// the explicit recursive versions used in production; `sequence_product` walks
// histories by prefix extension. `pair_product_monadic` /
// `sequence_product_monadic` are built from `bind` and `unit` only and rebuild
// the selector list at every step. The two must agree on every input.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace seqgame {

template <class X, class R>
using Valuation = std::function<R(const X&)>;

template <class X, class R>
class Selection {
 public:
  using candidate_type = X;
  using outcome_type = R;
  using Fn = std::function<X(const Valuation<X, R>&)>;

  Selection() = default;
  explicit Selection(Fn fn) : fn_(std::move(fn)) {}

  X operator()(const Valuation<X, R>& p) const { return fn_(p); }

  explicit operator bool() const noexcept { return static_cast<bool>(fn_); }

 private:
  Fn fn_;
};

template <class X, class R>
class Quantifier {
 public:
  using Fn = std::function<R(const Valuation<X, R>&)>;

  explicit Quantifier(Fn fn) : fn_(std::move(fn)) {}

  R operator()(const Valuation<X, R>& p) const { return fn_(p); }

 private:
  Fn fn_;
};

// Maps the moves chosen so far to a selection function over the next move.
// An empty optional means the history admits no further choice; products stop
// there instead of failing.
template <class X, class R>
using HistorySelector =
    std::function<std::optional<Selection<X, R>>(std::span<const X>)>;

template <class X, class R>
Quantifier<X, R> quantify(Selection<X, R> e) {
  return Quantifier<X, R>(
      [e = std::move(e)](const Valuation<X, R>& p) { return p(e(p)); });
}

template <class R, class X>
Selection<X, R> unit(X x) {
  return Selection<X, R>([x = std::move(x)](const Valuation<X, R>&) { return x; });
}

// functor action: result(q) == f(e(q . f))
template <class X, class R, class F,
          class Y = std::decay_t<std::invoke_result_t<F&, const X&>>>
Selection<Y, R> map_selection(F f, Selection<X, R> e) {
  return Selection<Y, R>([f = std::move(f), e = std::move(e)](const Valuation<Y, R>& q) {
    return f(e([&](const X& x) { return q(f(x)); }));
  });
}

// Monadic join: select the inner selection by the value it would attain, then
// run it.
template <class X, class R>
Selection<X, R> join(Selection<Selection<X, R>, R> ee) {
  return Selection<X, R>([ee = std::move(ee)](const Valuation<X, R>& p) {
    const Selection<X, R> chosen =
        ee([&](const Selection<X, R>& d) { return quantify(d)(p); });
    return chosen(p);
  });
}

template <class X, class R, class F,
          class SY = std::decay_t<std::invoke_result_t<F&, const X&>>>
SY bind(Selection<X, R> e, F f) {
  return join(map_selection(std::move(f), std::move(e)));
}

// Explicit product: with result (a0, a1),
//   a0 = e0(x0 -> quantify(e1(x0))(x1 -> p(x0, x1)))
//   a1 = e1(a0)(x1 -> p(a0, x1))
template <class X, class Y, class R>
Selection<std::pair<X, Y>, R> pair_product(Selection<X, R> e0,
                                           std::function<Selection<Y, R>(const X&)> e1) {
  using P = std::pair<X, Y>;
  return Selection<P, R>([e0 = std::move(e0), e1 = std::move(e1)](const Valuation<P, R>& p) {
    X a0 = e0([&](const X& x0) {
      return quantify(e1(x0))([&](const Y& x1) { return p(P{x0, x1}); });
    });
    Y a1 = e1(a0)([&](const Y& x1) { return p(P{a0, x1}); });
    return P{std::move(a0), std::move(a1)};
  });
}

template <class X, class Y, class R>
Selection<std::pair<X, Y>, R> pair_product_monadic(
    Selection<X, R> e0, std::function<Selection<Y, R>(const X&)> e1) {
  using P = std::pair<X, Y>;
  return bind(std::move(e0), [e1 = std::move(e1)](const X& x) {
    return bind(e1(x), [x](const Y& y) { return unit<R>(P{x, y}); });
  });
}

namespace detail {

// Extends `history` by the remaining selectors, each choosing the move whose
// optimal continuation scores best under `p`.
template <class X, class R>
std::vector<X> extend_optimally(std::span<const HistorySelector<X, R>> selectors,
                                std::vector<X> history,
                                const Valuation<std::vector<X>, R>& p) {
  if (selectors.empty()) return history;
  const std::optional<Selection<X, R>> e = selectors.front()(history);
  if (!e) return history;
  const auto rest = selectors.subspan(1);
  X chosen = (*e)([&](const X& x) {
    std::vector<X> extended;
    extended.reserve(history.size() + rest.size() + 1);
    extended = history;
    extended.push_back(x);
    return p(extend_optimally(rest, std::move(extended), p));
  });
  history.push_back(std::move(chosen));
  return extend_optimally(rest, std::move(history), p);
}

template <class X, class R>
Selection<std::vector<X>, R> product_monadic(std::vector<HistorySelector<X, R>> selectors) {
  using Play = std::vector<X>;
  if (selectors.empty()) return unit<R>(Play{});
  std::optional<Selection<X, R>> head = selectors.front()(std::span<const X>{});
  if (!head) return unit<R>(Play{});
  std::vector<HistorySelector<X, R>> tail(std::next(selectors.begin()), selectors.end());
  return bind(std::move(*head), [tail = std::move(tail)](const X& x) {
    std::vector<HistorySelector<X, R>> shifted;
    shifted.reserve(tail.size());
    for (const auto& d : tail) {
      shifted.push_back([d, x](std::span<const X> ys) {
        std::vector<X> h;
        h.reserve(ys.size() + 1);
        h.push_back(x);
        h.insert(h.end(), ys.begin(), ys.end());
        return d(h);
      });
    }
    return bind(product_monadic(std::move(shifted)), [x](const Play& xs) {
      Play play;
      play.reserve(xs.size() + 1);
      play.push_back(x);
      play.insert(play.end(), xs.begin(), xs.end());
      return unit<R>(std::move(play));
    });
  });
}

}  // namespace detail

template <class X, class R>
Selection<std::vector<X>, R> sequence_product(std::vector<HistorySelector<X, R>> selectors) {
  return Selection<std::vector<X>, R>(
      [selectors = std::move(selectors)](const Valuation<std::vector<X>, R>& p) {
        return detail::extend_optimally<X, R>(selectors, {}, p);
      });
}

template <class X, class R>
Selection<std::vector<X>, R> sequence_product_monadic(
    std::vector<HistorySelector<X, R>> selectors) {
  return detail::product_monadic<X, R>(std::move(selectors));
}

}  // namespace seqgame
