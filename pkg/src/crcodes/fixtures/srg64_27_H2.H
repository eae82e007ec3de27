# q=2  SRG(64,27,10,12) H2
000000111111111111111100000
011111000000000111111010000
100011000001111001111001000
100101001110001010111000100
001011010110011100011000010
010011101010101100101000001
