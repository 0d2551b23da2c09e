#include "closedfactors/sliding_suffix_tree.hpp"

#include "closedfactors/error.hpp"

namespace closedfactors {

std::size_t SlidingSuffixTree::append_right(Symbol symbol) {
  const Window w = tree_.window();
  const auto& text = tree_.text();
  if (w.end >= text.size() || text.symbols()[w.end] != symbol)
    throw Error(ErrorCode::PastEnd, "appended symbol is not the next text symbol");
  return tree_.extend();
}

}  // namespace closedfactors
