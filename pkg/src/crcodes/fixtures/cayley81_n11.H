# q=3  graph with the {21,4;2,21}-CR code, 4x11
10000111122
01001011212
00101101221
00011110111
