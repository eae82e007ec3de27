# q=2  SRG(64,27,10,12) H5
000000111111111111111100000
011111000000000111111010000
100011000001111001111001000
000111001110011010011000100
001101010010111100101000010
110010100100101110011000001
