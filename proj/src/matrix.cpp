#include "pascalforms/matrix.hpp"

namespace pascalforms {

namespace {

// Merge an explicit band size with the sizes implied by present blocks.
void settle(Index& size, Index from_block, const char* what) {
  if (from_block < 0) return;
  if (size < 0) {
    size = from_block;
    return;
  }
  detail::require(size == from_block, what);
}

}  // namespace

IntMatrix block2x2(const std::optional<IntMatrix>& top_left,
                   const std::optional<IntMatrix>& top_right,
                   const std::optional<IntMatrix>& bottom_left,
                   const std::optional<IntMatrix>& bottom_right,
                   Index top_rows, Index bottom_rows,
                   Index left_cols, Index right_cols) {
  settle(top_rows, top_left ? top_left->rows() : -1, "block2x2: top row size mismatch");
  settle(top_rows, top_right ? top_right->rows() : -1, "block2x2: top row size mismatch");
  settle(bottom_rows, bottom_left ? bottom_left->rows() : -1, "block2x2: bottom row size mismatch");
  settle(bottom_rows, bottom_right ? bottom_right->rows() : -1, "block2x2: bottom row size mismatch");
  settle(left_cols, top_left ? top_left->cols() : -1, "block2x2: left column size mismatch");
  settle(left_cols, bottom_left ? bottom_left->cols() : -1, "block2x2: left column size mismatch");
  settle(right_cols, top_right ? top_right->cols() : -1, "block2x2: right column size mismatch");
  settle(right_cols, bottom_right ? bottom_right->cols() : -1, "block2x2: right column size mismatch");
  detail::require(top_rows >= 0 && bottom_rows >= 0 && left_cols >= 0 && right_cols >= 0,
                  "block2x2: band size cannot be deduced");

  IntMatrix out = IntMatrix::Zero(top_rows + bottom_rows, left_cols + right_cols);
  if (top_left) out.block(0, 0, top_rows, left_cols) = *top_left;
  if (top_right) out.block(0, left_cols, top_rows, right_cols) = *top_right;
  if (bottom_left) out.block(top_rows, 0, bottom_rows, left_cols) = *bottom_left;
  if (bottom_right) out.block(top_rows, left_cols, bottom_rows, right_cols) = *bottom_right;
  return out;
}

}  // namespace pascalforms
