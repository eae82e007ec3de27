# q=2  SRG(64,27,10,12) H1
000000111111111111111100000
011111000000000111111010000
100011000001111001111001000
100101001110001010111000100
101001110010010011011000010
110001010110111100001000001
