// Board colors are the heat-map palette, exactly: red 0, grey *, black 1.

export const PALETTE: Record<string, string> = {
  "0": "#ff0000",
  "*": "#808080",
  "1": "#000000",
};
